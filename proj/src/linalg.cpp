#include "fusionkit/linalg.hpp"

#include <utility>

namespace fusionkit {

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::domain_error("inverse of a non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const mpq_class p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const mpq_class f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(static_cast<long>(m(i, j)));
  return r;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64");
  return z.get_si();
}

std::int64_t to_int64(const mpq_class& q) {
  if (q.get_den() != 1) throw std::domain_error("rational value is not an integer");
  return to_int64(mpz_class(q.get_num()));
}

}  // namespace fusionkit
