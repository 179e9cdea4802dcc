#pragma once

// Small dense matrices over exact types (int64 or GMP rationals).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fusionkit {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<mpq_class>;

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

// Overflow-checked int64 helpers. Throw std::overflow_error.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

/// Converts an integral rational to int64; throws std::domain_error otherwise.
std::int64_t to_int64(const mpq_class& q);
std::int64_t to_int64(const mpz_class& z);

}  // namespace fusionkit
