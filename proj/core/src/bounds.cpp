#include "maxdet/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace maxdet {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

// ln(hi! / lo!) = sum of ln i for i in (lo, hi]
double ln_factorial_ratio(std::int64_t hi, std::int64_t lo) {
  double s = 0.0;
  for (std::int64_t i = lo + 1; i <= hi; ++i) s += std::log(double(i));
  return s;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

LogMagnitude hadamard_bound(std::int64_t m, std::int64_t k) {
  require(m >= 1 && k >= 1, "hadamard_bound: m, k must be >= 1");
  return LogMagnitude::from_ln(0.5 * double(m) * std::log(double(k)));
}

RyserBound ryser_bound(std::int64_t n, std::int64_t k) {
  require(n >= 2, "ryser_bound: n must be >= 2");
  require(k >= 1 && k <= n, "ryser_bound: need 1 <= k <= n");
  RyserBound b;
  b.lambda = Rational(k * (k - 1), n - 1);
  const Rational gap = Rational(k) - b.lambda;
  if (gap == 0) {
    b.value = LogMagnitude::zero();  // k = n: only the all-ones matrix
    return b;
  }
  b.value = LogMagnitude::from_ln(std::log(double(k)) +
                                  0.5 * double(n - 1) * std::log(to_double(gap)));
  return b;
}

RyserRectBound ryser_gen_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  require(m >= 2, "ryser_gen_bound: m must be >= 2");
  require(n >= 1 && k >= 1 && k <= n, "ryser_gen_bound: need 1 <= k <= n");
  RyserRectBound b;
  if (m * k <= n) {
    // Average column overlap is <= 0: no information, fall back to Hadamard.
    b.mu = 0;
    b.value = hadamard_bound(m, k);
    return b;
  }
  b.mu = Rational(k, m - 1) * (Rational(m * k, n) - 1);
  const Rational gap = Rational(k) - b.mu;
  if (gap == 0) {
    b.value = LogMagnitude::zero();
    return b;
  }
  b.value = LogMagnitude::from_ln(std::log(double(k)) +
                                  0.5 * (std::log(double(m)) - std::log(double(n))) +
                                  0.5 * double(m - 1) * std::log(to_double(gap)));
  return b;
}

LogMagnitude c_pair(std::int64_t k) {
  require(k >= 1, "c_pair: k must be >= 1");
  if (k == 1) return LogMagnitude::one();
  const double kd = double(k);
  return LogMagnitude::from_ln(0.25 * (1.0 - 1.0 / kd) * std::log(kd * kd - 1.0) +
                               std::log(kd) / (2.0 * kd));
}

LogMagnitude pair_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  require(m >= 1 && n >= 1, "pair_bound: m, n must be >= 1");
  require(k >= 1 && k <= n, "pair_bound: need 1 <= k <= n");
  if (k == 1) return LogMagnitude::one();
  const double md = double(m), nd = double(n), kd = double(k);
  const double t = md / 2.0 - nd / (2.0 * kd);
  if (t <= 0.0) return hadamard_bound(m, k);
  return LogMagnitude::from_ln(t * 0.5 * std::log(kd * kd - 1.0) +
                               nd / (2.0 * kd) * std::log(kd));
}

LogMagnitude c_q(std::int64_t q, std::int64_t k) {
  require(k >= 1, "c_q: k must be >= 1");
  require(q >= 1 && q <= k, "c_q: need 1 <= q <= k");
  const double qd = double(q), kd = double(k);
  const double shrink = 1.0 - (qd - 1.0) / kd;
  double ln = (1.0 / (2.0 * qd)) * shrink * std::log(qd + kd - 1.0);
  if (q > 1) {
    ln += ((qd - 1.0) / (2.0 * qd)) * shrink * std::log(kd - 1.0);
    ln += ((qd - 1.0) / (2.0 * kd)) * std::log(kd);
  }
  return LogMagnitude::from_ln(ln);
}

LogMagnitude q_row_bound(std::int64_t m, std::int64_t n, std::int64_t k,
                         std::int64_t q) {
  require(m >= 1 && n >= 1, "q_row_bound: m, n must be >= 1");
  require(k >= 1 && k <= n, "q_row_bound: need 1 <= k <= n");
  require(q >= 1 && q <= k, "q_row_bound: need 1 <= q <= k");
  const double md = double(m), nd = double(n), kd = double(k), qd = double(q);
  const double t = md / qd - (nd / kd) * (qd - 1.0) / qd;
  if (t <= 0.0) return hadamard_bound(m, k);
  double group_ln = std::log(qd + kd - 1.0);
  if (q > 1) group_ln += (qd - 1.0) * std::log(kd - 1.0);
  return LogMagnitude::from_ln(t * 0.5 * group_ln +
                               nd * (qd - 1.0) / (2.0 * kd) * std::log(kd));
}

OptimalGroup optimal_q(std::int64_t k) {
  require(k >= 1, "optimal_q: k must be >= 1");
  OptimalGroup best{1, c_q(1, k)};
  for (std::int64_t q = 2; q <= k; ++q) {
    LogMagnitude c = c_q(q, k);
    if (c.ln() < best.c.ln()) best = {q, c};
  }
  return best;
}

double s_star(double tolerance) {
  require(tolerance > 0.0, "s_star: tolerance must be > 0");
  const auto f = [](double s) { return s * s * s + s - std::log1p(s) * (s + 1.0); };
  double lo = 1e-6, hi = 1.0;  // f(lo) < 0 < f(hi)
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Rational harmonic(std::int64_t j) {
  require(j >= 0, "harmonic: j must be >= 0");
  Rational h = 0;
  for (std::int64_t i = 1; i <= j; ++i) h += Rational(1, i);
  return h;
}

LogMagnitude greedy_alpha(std::int64_t k) {
  require(k >= 2, "greedy_alpha: k must be >= 2");
  const double ln = 0.5 * ln_factorial_ratio(2 * k - 1, k - 1) +
                    0.25 * double(k * k - k) * std::log(double(k - 1));
  return LogMagnitude::from_ln(ln);
}

LogMagnitude greedy_beta(std::int64_t k) {
  require(k >= 2, "greedy_beta: k must be >= 2");
  const double kd = double(k);
  const double h = to_double(harmonic(k));
  const double ln = (h / (2.0 * kd)) * std::log(kd + kd / h - 1.0) +
                    0.5 * (1.0 - h / kd) * std::log(kd - 1.0);
  return LogMagnitude::from_ln(ln);
}

LogMagnitude greedy_closed_bound(std::int64_t m, std::int64_t n, std::int64_t k) {
  require(m >= 1 && m <= n, "greedy_closed_bound: need 1 <= m <= n");
  require(k >= 1 && k <= n, "greedy_closed_bound: need 1 <= k <= n");
  if (m == n && k >= 2) {
    // Square case: the final-group estimate merges into the main product and
    // the whole bound collapses to alpha_k beta_k^n.
    return greedy_alpha(k) * pow(greedy_beta(k), double(n));
  }
  const std::int64_t r = ceil_div(m * k, n);
  const double md = double(m), nd = double(n), kd = double(k);
  double ln = 0.5 * ln_factorial_ratio(r + k - 2, k - 1);
  if (k >= 2) ln += 0.25 * double((r - 1) * (r - 2)) * std::log(kd - 1.0);
  if (r >= 2) {
    const double h = to_double(harmonic(r - 1));
    ln += nd * h / (2.0 * kd) * std::log(kd + double(r - 1) / h - 1.0);
    if (k >= 2) ln += nd / (2.0 * kd) * (double(r) - h - 1.0) * std::log(kd - 1.0);
  }
  double final_group_ln = std::log(double(r) + kd - 1.0);
  if (k >= 2) final_group_ln += double(r - 1) * std::log(kd - 1.0);
  ln += 0.5 * (nd * nd / (kd * kd * md) + 1.0) * final_group_ln;
  return LogMagnitude::from_ln(ln);
}

LogMagnitude perturbed_bound(std::int64_t k, double delta) {
  require(k >= 2, "perturbed_bound: k must be >= 2");
  require(delta >= 0.0 && delta < 1.0, "perturbed_bound: delta in [0,1)");
  const double kd = double(k);
  const double up = 1.0 + delta, down = 1.0 - delta;
  const double ln =
      0.25 * (1.0 - 1.0 / kd) * std::log(kd * kd * up * up - down * down) +
      std::log(kd * up * up) / (2.0 * kd);
  return LogMagnitude::from_ln(ln);
}

LogMagnitude design_lower_bound(std::int64_t k) {
  require(k >= 2, "design_lower_bound: k must be >= 2");
  const double kd = double(k);
  const double denom = kd * kd - kd + 1.0;
  const double ln = std::log(kd) / denom +
                    (0.5 - 1.0 / (2.0 * denom)) * std::log(kd - 1.0);
  return LogMagnitude::from_ln(ln);
}

LogMagnitude biplane_lower_bound() {
  return LogMagnitude::from_ln(std::log(1215.0) / 11.0);
}

BigInt det_s_formula(std::int64_t n, std::int64_t a, std::int64_t k) {
  require(n >= 1, "det_s_formula: n must be >= 1");
  BigInt gap = k - a;
  BigInt power = 1;
  for (std::int64_t i = 0; i < n - 1; ++i) power *= gap;
  return BigInt(a * (n - 1) + k) * power;
}

LogMagnitude det_s_formula(std::int64_t n, double x, std::int64_t k) {
  require(n >= 1, "det_s_formula: n must be >= 1");
  const double lead = x * double(n - 1) + double(k);
  const double gap = double(k) - x;
  if (lead < 0.0 || gap < 0.0) {
    throw std::domain_error("det_s_formula: value is negative for x > k");
  }
  if (lead == 0.0 || gap == 0.0) return LogMagnitude::zero();
  return LogMagnitude::from_ln(std::log(lead) + double(n - 1) * std::log(gap));
}

LogMagnitude conjectured_dtilde(double k_tilde) {
  require(k_tilde > 1.0, "conjectured_dtilde: k_tilde must be > 1");
  const std::int64_t k = static_cast<std::int64_t>(std::floor(k_tilde));
  const double gamma = k_tilde - double(k);
  if (gamma == 0.0) return c_pair(k);
  const double kd = double(k);
  double ln = 0.0;
  if (k >= 2) {
    // k = 1 has no overlapping-pair factor: weight-1 rows sharing a column
    // are equal and the block is plain Hadamard, which contributes 1.
    ln += ((1.0 - gamma) / 2.0 - 1.0 / (2.0 * kd)) * 0.5 * std::log(kd * kd - 1.0);
  }
  ln += ((1.0 - gamma) / kd) * 0.5 * std::log(kd);
  ln += (gamma / 2.0 - 1.0 / (2.0 * (kd + 1.0))) * 0.5 *
        std::log((kd + 1.0) * (kd + 1.0) - 1.0);
  ln += (gamma / (kd + 1.0)) * 0.5 * std::log(kd + 1.0);
  return LogMagnitude::from_ln(ln);
}

bool compare_beats_ryser(std::int64_t n, std::int64_t k) {
  require(n >= 2, "compare_beats_ryser: n must be >= 2");
  const LogMagnitude pair = pow(c_pair(k), double(n));
  return pair < ryser_bound(n, k).value;
}

LogMagnitude t2_bound(std::int64_t n) {
  require(n >= 1, "t2_bound: n must be >= 1");
  return LogMagnitude::from_ln(double(n) / 6.0 * std::log(6.0));
}

}  // namespace maxdet
