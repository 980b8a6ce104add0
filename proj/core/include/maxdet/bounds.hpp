#pragma once

#include <cstdint>

#include "maxdet/log_magnitude.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

// Closed-form determinant bounds for zero-one matrices with row sums k.
// Every value is returned in log domain; exact rationals (lambda, mu, H_j)
// are kept rational until the final log evaluation.

/// k^{m/2}: product of the row norms sqrt(k) over m rows.
LogMagnitude hadamard_bound(std::int64_t m, std::int64_t k);

struct RyserBound {
  Rational lambda;  // k(k-1)/(n-1)
  LogMagnitude value;
};

/// k (k - lambda)^{(n-1)/2} for an n x n matrix with kn ones.
/// Tight exactly at incidence matrices of symmetric designs.
RyserBound ryser_bound(std::int64_t n, std::int64_t k);

struct RyserRectBound {
  Rational mu;  // (k/(m-1)) (mk/n - 1), clamped at 0 when mk <= n
  LogMagnitude value;
};

/// Volume bound k sqrt(m/n) (k - mu)^{(m-1)/2} for m x n matrices with row
/// sums k. For mk <= n the average column overlap gives no information, so
/// mu clamps to 0 and the bound falls back to Hadamard k^{m/2}.
/// At m = n this reduces to the square bound with lambda = k(k-1)/(n-1);
/// the k(k-1)/n variant sometimes quoted for mu is inconsistent with that
/// reduction and is not used here.
RyserRectBound ryser_gen_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// Growth constant of the pairwise removal bound:
/// c_k = sqrt(k^2-1)^{(1-1/k)/2} k^{1/(2k)}; c_1 = 1 (Hadamard).
LogMagnitude c_pair(std::int64_t k);

/// sqrt(k^2-1)^{m/2 - n/(2k)} k^{n/(2k)}; falls back to Hadamard when
/// mk < n (no overlapping pair is guaranteed).
LogMagnitude pair_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// Growth constant for removal in groups of q rows sharing a column of ones,
/// 1 <= q <= k:
/// c_{q,k} = (q+k-1)^{(1/2q)(1-(q-1)/k)} (k-1)^{((q-1)/2q)(1-(q-1)/k)} k^{(q-1)/2k}.
/// q = 1 reduces to sqrt(k), q = 2 to c_pair.
LogMagnitude c_q(std::int64_t q, std::int64_t k);

/// sqrt((q+k-1)(k-1)^{q-1})^{m/q - (n/k)(q-1)/q} k^{n(q-1)/(2k)}; the group
/// factor exponent clamps at 0 when the column average never exceeds q-1.
LogMagnitude q_row_bound(std::int64_t m, std::int64_t n, std::int64_t k,
                         std::int64_t q);

struct OptimalGroup {
  std::int64_t q = 1;
  LogMagnitude c;
};

/// argmin over q in {1..k} of c_q(q,k); ties broken toward smaller q.
OptimalGroup optimal_q(std::int64_t k);

/// Unique positive root of s^3 + s - log(1+s)(s+1) in (0,1), located by
/// bisection on [1e-6, 1]. The optimal group ratio q*/k tends to this root.
double s_star(double tolerance);

/// Exact j-th harmonic number sum_{i=1}^{j} 1/i; 0 for j = 0.
Rational harmonic(std::int64_t j);

/// Prefactor of the greedy removal bound M_R(n,k) <= alpha_k beta_k^n:
/// alpha_k = sqrt((2k-1)!/(k-1)!) (k-1)^{(k^2-k)/4}.
LogMagnitude greedy_alpha(std::int64_t k);

/// Growth rate of the greedy removal bound:
/// beta_k = (k + k/H_k - 1)^{H_k/(2k)} (k-1)^{(1-H_k/k)/2}.
LogMagnitude greedy_beta(std::int64_t k);

/// Closed form of the greedy removal bound for m x n, with r = ceil(mk/n):
/// the product of the factorial prefix, the Jensen-smoothed group factor and
/// the final-group term. For m = n this is exactly alpha_k beta_k^n.
LogMagnitude greedy_closed_bound(std::int64_t m, std::int64_t n, std::int64_t k);

/// Pairwise removal constant for rows with k nonzeros in [1-delta, 1+delta]:
/// d_delta(k) = sqrt(k^2(1+d)^2 - (1-d)^2)^{(1-1/k)/2} (k(1+d)^2)^{1/(2k)}.
/// delta = 0 collapses to c_pair(k).
LogMagnitude perturbed_bound(std::int64_t k, double delta);

/// Per-n growth rate of block-diagonal replication of a projective-plane
/// incidence matrix: k^{1/(k^2-k+1)} (k-1)^{1/2 - 1/(2(k^2-k+1))}.
/// Attainable when k-1 is prime; computed for all k >= 2.
LogMagnitude design_lower_bound(std::int64_t k);

/// Per-n growth rate 1215^{1/11} from replicating the (11,5,2) biplane.
LogMagnitude biplane_lower_bound();

/// det of the n x n matrix with diagonal k and off-diagonal a:
/// (a(n-1) + k)(k-a)^{n-1}, evaluated exactly.
BigInt det_s_formula(std::int64_t n, std::int64_t a, std::int64_t k);

/// Real-argument variant of the same formula, in log domain. Requires
/// x <= k (the value is negative beyond that and has no log representation).
LogMagnitude det_s_formula(std::int64_t n, double x, std::int64_t k);

/// Conjectural growth rate for n x n matrices with k_tilde * n ones,
/// k_tilde > 1 real: weight-k and weight-(k+1) row blocks bounded separately
/// with k = floor(k_tilde), gamma = k_tilde - k. Integer k_tilde reduces to
/// c_pair. Report it as conjectural-upper, never as a proven bound.
LogMagnitude conjectured_dtilde(double k_tilde);

/// True iff c_pair(k)^n < ryser_bound(n,k), i.e. the pairwise bound beats
/// the classical one at this finite (n,k). (Asymptotically guaranteed for
/// k = o(n^{1/3}); here evaluated literally.)
bool compare_beats_ryser(std::int64_t n, std::int64_t k);

/// 6^{n/6}, the known bound for n x n zero-one matrices with 2n ones.
LogMagnitude t2_bound(std::int64_t n);

}  // namespace maxdet
