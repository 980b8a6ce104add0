#pragma once

#include <cstdint>

#include "maxdet/matrix.hpp"

namespace maxdet {

/// Exact determinant by fraction-free Bareiss elimination. No floating point,
/// no rounding; intermediate values stay determinants of minors.
/// Throws std::invalid_argument for non-square input.
BigInt det_exact(const IntMatrix& m);
BigInt det_exact(const ZeroOneMatrix& m);

/// Gram matrix A * A^T. Result is rows x rows, symmetric, with row sums on
/// the diagonal.
IntMatrix gram(const ZeroOneMatrix& a);

/// det(A * A^T), the squared volume of the row parallelepiped.
/// Requires rows <= cols; zero iff the rows are linearly dependent.
BigInt vol_squared(const ZeroOneMatrix& a);

struct ClassFlags {
  bool in_r = false;  // every row sums to k
  bool in_s = false;  // square, every row and column sums to k
  bool in_t = false;  // square with exactly k*n ones in total
  bool operator==(const ClassFlags&) const = default;
};

ClassFlags class_membership(const ZeroOneMatrix& a, std::int64_t k);

}  // namespace maxdet
