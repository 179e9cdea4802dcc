#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fusionkit {

using Label = std::int64_t;

/// Integral weight as Dynkin labels n_i = <lambda, alpha_i^vee> in the
/// fundamental-weight basis. Ordering is lexicographic on the labels.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : labels_(rank, 0) {}
  Weight(std::initializer_list<Label> labels) : labels_(labels) {}
  explicit Weight(std::vector<Label> labels) : labels_(std::move(labels)) {}

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  Label operator[](std::size_t i) const { return labels_[i]; }
  Label& operator[](std::size_t i) { return labels_[i]; }

  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  bool is_zero() const noexcept;
  /// All labels >= 0.
  bool is_dominant() const noexcept;
  /// All labels > 0.
  bool is_regular_dominant() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  Weight& operator*=(Label scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Label s, Weight a) { return a *= s; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "3,2"
  std::string to_string() const;

 private:
  std::vector<Label> labels_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Parses comma-separated labels such as "3,2" or "-1, 4".
Weight parse_weight(const std::string& text);

}  // namespace fusionkit
