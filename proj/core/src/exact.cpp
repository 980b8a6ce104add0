#include "maxdet/exact.hpp"

#include <stdexcept>

namespace maxdet {

BigInt det_exact(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("det_exact: matrix must be square");
  }
  const std::size_t n = input.rows();
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        // Exact division: every quotient here is an integer minor.
        m(i, j) = (m(i, j) * m(col, col) - m(i, col) * m(col, j)) / prev;
      }
    }
    prev = m(col, col);
  }
  BigInt d = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

BigInt det_exact(const ZeroOneMatrix& m) { return det_exact(to_int_matrix(m)); }

IntMatrix gram(const ZeroOneMatrix& a) {
  const std::size_t m = a.rows();
  IntMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) dot += a(i, c) & a(j, c);
      g(i, j) = dot;
      g(j, i) = dot;
    }
  }
  return g;
}

BigInt vol_squared(const ZeroOneMatrix& a) {
  if (a.rows() > a.cols()) {
    throw std::invalid_argument("vol_squared: requires rows <= cols");
  }
  return det_exact(gram(a));
}

ClassFlags class_membership(const ZeroOneMatrix& a, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("class_membership: k must be >= 0");
  ClassFlags flags;
  flags.in_r = true;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.row_sum(r) != k) {
      flags.in_r = false;
      break;
    }
  }
  const bool square = a.rows() == a.cols();
  if (square && flags.in_r) {
    flags.in_s = true;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.col_sum(c) != k) {
        flags.in_s = false;
        break;
      }
    }
  }
  flags.in_t = square && a.total_ones() == k * std::int64_t(a.rows());
  return flags;
}

}  // namespace maxdet
