#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxdet/log_magnitude.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

/// R: square, all row sums k. S: square, all row and column sums k.
/// T: square with k*n ones in total.
enum class MatrixClass { R, S, T };

const char* to_string(MatrixClass cls);
MatrixClass matrix_class_from_string(const std::string& s);

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // node limit; above it exhaustive=false
  int threads = 1;
  bool prune = true;  // bound pruning; class constraints always apply
  std::int64_t size_limit_rs = 7;
  std::int64_t size_limit_t = 6;
};

struct SearchResult {
  MatrixClass cls = MatrixClass::R;
  std::int64_t n = 0;
  std::int64_t k = 0;
  BigInt max_abs_det;
  ZeroOneMatrix witness{1, 1};
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

/// Certified maximum of |det| over the class by branch-and-bound over
/// canonical row sequences (rows nonincreasing in lexicographic order, first
/// row fixed by column permutation). Exhaustive results are reproducible
/// across runs and thread counts; the witness is the first maximizing leaf
/// in canonical order.
SearchResult search_max_det(MatrixClass cls, std::int64_t n, std::int64_t k,
                            const SearchOptions& options = {});

struct ConditionCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<ConditionCheck> conditions;
  bool all_pass = false;
};

/// Checks the pair of reference matrices A10/B10: both lie in S(10,3), B10
/// has determinant 48 while A10 has determinant 15, yet every off-diagonal
/// entry of A10*A10^T and A10^T*A10 is within distance 1 of 2/3. Together
/// these refute the claim that the Gram off-diagonal window pins down the
/// maximum determinant.
CounterexampleReport verify_counterexample();

struct BoundCheck {
  std::string name;
  bool is_upper = true;
  LogMagnitude bound;
  double log10_margin = 0.0;  // slack between bound and the searched maximum
  bool ok = false;
};

struct CertifyReport {
  SearchResult search;
  std::vector<BoundCheck> checks;
  bool all_ok = false;
};

/// Runs the exhaustive search and asserts the maximum against every
/// applicable closed-form upper bound and constructed lower bound.
/// Any violation signals an implementation bug.
CertifyReport certify_bounds(MatrixClass cls, std::int64_t n, std::int64_t k,
                             const SearchOptions& options = {});

}  // namespace maxdet
