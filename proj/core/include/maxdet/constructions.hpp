#pragma once

#include <cstdint>

#include "maxdet/matrix.hpp"

namespace maxdet {

/// n x n matrix with diagonal k and off-diagonal a, i.e. aJ + (k-a)I.
IntMatrix s_matrix(std::int64_t n, std::int64_t a, std::int64_t k);

/// Incidence matrix of the projective plane of prime order p, built from the
/// 1-dimensional subspaces of F_p^3. Points and lines are normalized
/// homogeneous triples (first nonzero coordinate 1) in lexicographic order,
/// so the output is deterministic. Size (p^2+p+1) x (p^2+p+1), all row and
/// column sums p+1, any two rows share exactly one column of ones.
/// Throws std::invalid_argument for non-prime p (prime powers included:
/// extension-field orders are not supported).
ZeroOneMatrix projective_plane(std::int64_t p);

/// Circulant incidence matrix of the (11,5,2) biplane from the quadratic
/// residue difference set {1,3,4,5,9} mod 11. |det| = 1215.
ZeroOneMatrix biplane_11();

/// Block-diagonal matrix with t copies of square A; det is det(A)^t.
ZeroOneMatrix block_diag_power(const ZeroOneMatrix& a, std::int64_t t);

/// Fixed matrices used as reference cases, transcribed verbatim.
///  R7_K2: 7 x 7 with row sums 2 but unequal column sums, |det| = 4.
///  A10:   10 x 10 in S(10,3) with det 15 and Gram off-diagonals in {0,1}.
///  B10:   10 x 10 in S(10,3) with det 48.
enum class NamedMatrix { R7_K2, A10, B10 };

ZeroOneMatrix named_matrix(NamedMatrix id);

}  // namespace maxdet
