#pragma once

#include <cstddef>
#include <filesystem>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/cartan.hpp"

namespace fusionkit {

inline constexpr std::size_t kDefaultMaxDim = 1000000;

/// Weights of V^lambda with multiplicities. Immutable once built.
class WeightSystem {
 public:
  WeightSystem(Weight highest, std::map<Weight, Label> dominant_mults, std::map<Weight, Label> mults)
      : highest_(std::move(highest)), dominant_(std::move(dominant_mults)), mults_(std::move(mults)) {}

  const Weight& highest() const noexcept { return highest_; }
  /// Every weight of the module (W-closed), lexicographic order.
  const std::map<Weight, Label>& mults() const noexcept { return mults_; }
  /// Dominant weights only.
  const std::map<Weight, Label>& dominant_mults() const noexcept { return dominant_; }

  Label mult(const Weight& beta) const;
  bool contains(const Weight& beta) const { return mults_.count(beta) != 0; }
  std::size_t size() const noexcept { return mults_.size(); }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  Weight highest_;
  std::map<Weight, Label> dominant_;
  std::map<Weight, Label> mults_;
};

/// Weight string beta - r delta, ..., beta, ..., beta + q delta.
struct WeightString {
  Label r = 0;
  Label q = 0;

  friend bool operator==(const WeightString&, const WeightString&) = default;
};

/// Dominant beta <= lambda (lambda - beta a nonnegative integer combination of
/// simple roots), lexicographic order.
std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula, exact. Used for bound checks.
mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Inner multiplicities through Mult(nu) = -sum_{w != 1} eps(w) Mult(nu + rho - w rho).
WeightSystem racah_multiplicities(const RootSystem& rs, const Weight& lambda, std::size_t max_dim = kDefaultMaxDim);

/// Inner multiplicities through Freudenthal's formula, kept independent of the
/// Racah path as a cross-check.
WeightSystem freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda,
                                        std::size_t max_dim = kDefaultMaxDim);

Label dimension(const WeightSystem& ws);

/// String through beta in direction delta (a simple root or theta).
/// Throws std::invalid_argument if beta is not a weight of ws.
WeightString weight_string(const WeightSystem& ws, const Weight& beta, const Weight& direction);

/// LRU cache of weight systems keyed by (algebra, highest weight). Safe for
/// concurrent readers; inserts take an exclusive lock. With a directory set,
/// systems are also persisted as JSON files there.
class WeightSystemCache {
 public:
  explicit WeightSystemCache(std::size_t capacity = 256, std::optional<std::filesystem::path> dir = std::nullopt);

  std::shared_ptr<const WeightSystem> get(const RootSystem& rs, const Weight& lambda,
                                          std::size_t max_dim = kDefaultMaxDim);

  void set_directory(std::optional<std::filesystem::path> dir);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::string;
  std::shared_ptr<const WeightSystem> load_from_disk(const Key& key, const Weight& lambda) const;
  void store_to_disk(const Key& key, const WeightSystem& ws) const;

  std::size_t capacity_;
  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mutex_;
  std::list<Key> recency_;
  std::unordered_map<Key, std::pair<std::shared_ptr<const WeightSystem>, std::list<Key>::iterator>> entries_;
};

/// Process-wide cache used by the convenience overloads in tensor/fusion code.
WeightSystemCache& default_weight_cache();

}  // namespace fusionkit
