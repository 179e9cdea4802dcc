#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusionkit {

/// Bad algebra identifier (unknown family or rank outside the family's range).
class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weights of different ranks were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound (|W|, dim V, |P_k^+|, group order) was exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight lies above the requested level.
class LevelError : public std::invalid_argument {
 public:
  LevelError(const std::string& what, std::int64_t theta_pairing, std::int64_t level)
      : std::invalid_argument(what), theta_pairing_(theta_pairing), level_(level) {}

  std::int64_t theta_pairing() const noexcept { return theta_pairing_; }
  std::int64_t level() const noexcept { return level_; }

 private:
  std::int64_t theta_pairing_;
  std::int64_t level_;
};

/// A fusion coefficient > 1 was handed to the {0,1}-only cover machinery.
class UnsupportedCoefficient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A freshly built fusion algebra violated one of its axioms. Always a bug.
class AxiomViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input; `position` is the 0-based column of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fusionkit
