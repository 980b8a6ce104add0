#include <doctest.h>

#include <cmath>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/exact.hpp"

using namespace maxdet;

namespace {

// |actual/reference - 1| for values handed around in log domain.
double rel_gap(const LogMagnitude& actual, double ref_log10) {
  return std::abs(std::pow(10.0, actual.log10() - ref_log10) - 1.0);
}

double rel_gap(const LogMagnitude& actual, const LogMagnitude& reference) {
  return std::abs(std::exp(actual.ln() - reference.ln()) - 1.0);
}

}  // namespace

TEST_CASE("hadamard bound") {
  CHECK(rel_gap(hadamard_bound(1000, 3), 238.0 + std::log10(3.636)) < 1e-3);
  CHECK(hadamard_bound(12, 1).value() == doctest::Approx(1.0));
  CHECK(hadamard_bound(2, 4).value() == doctest::Approx(4.0));
  CHECK_THROWS_AS(hadamard_bound(0, 3), std::domain_error);
}

TEST_CASE("ryser bound") {
  const RyserBound b = ryser_bound(1000, 3);
  CHECK(b.lambda == Rational(2, 333));
  CHECK(rel_gap(b.value, 238.0 + std::log10(2.3145)) < 1e-3);

  const RyserBound fano = ryser_bound(7, 3);
  CHECK(fano.lambda == 1);
  CHECK(fano.value.value() == doctest::Approx(24.0));

  const RyserBound k1 = ryser_bound(50, 1);
  CHECK(k1.lambda == 0);
  CHECK(k1.value.value() == doctest::Approx(1.0));

  CHECK(ryser_bound(5, 5).value.is_zero());  // all-ones matrix only
  CHECK_THROWS_AS(ryser_bound(1, 1), std::domain_error);
  CHECK_THROWS_AS(ryser_bound(4, 5), std::domain_error);
}

TEST_CASE("rectangular ryser bound") {
  // m = n recovers the square bound.
  for (std::int64_t n : {5, 9, 30}) {
    for (std::int64_t k = 1; k <= n && k <= 6; ++k) {
      const RyserRectBound rect = ryser_gen_bound(n, n, k);
      const RyserBound square = ryser_bound(n, k);
      CHECK(rect.mu == square.lambda);
      if (!square.value.is_zero()) {
        CHECK(rect.value.ln() == doctest::Approx(square.value.ln()).epsilon(1e-12));
      }
    }
  }

  // mk = n boundary clamps to Hadamard: orthogonal rows are achievable.
  const RyserRectBound clamp = ryser_gen_bound(2, 4, 2);
  CHECK(clamp.mu == 0);
  CHECK(clamp.value.value() == doctest::Approx(2.0));

  const RyserRectBound r442 = ryser_gen_bound(4, 4, 2);
  CHECK(r442.mu == Rational(2, 3));
  CHECK(r442.value.value() == doctest::Approx(2.0 * std::pow(4.0 / 3.0, 1.5)));
  // Exhausted search over R(4,4,2) gives max 2, safely below 3.0792.
  CHECK(r442.value.value() > 2.0);
  CHECK_THROWS_AS(ryser_gen_bound(1, 4, 2), std::domain_error);
}

TEST_CASE("pair constant and pair bound") {
  CHECK(c_pair(3).ln() == doctest::Approx(std::log(24.0) / 6.0).epsilon(1e-14));
  CHECK(c_pair(3).value() == doctest::Approx(1.6984).epsilon(5e-5));
  CHECK(c_pair(17).value() == doctest::Approx(4.1197).epsilon(5e-5));
  CHECK(c_pair(1).value() == doctest::Approx(1.0));

  CHECK(rel_gap(pair_bound(1000, 1000, 3), 230.0 + std::log10(1.0844)) < 1e-3);
  // Square case is the constant to the n-th power.
  for (std::int64_t k : {2, 3, 7, 17}) {
    CHECK(pair_bound(500, 500, k).ln() ==
          doctest::Approx(500.0 * c_pair(k).ln()).epsilon(1e-12));
  }
  // mk < n: no guaranteed overlap, Hadamard fallback.
  CHECK(pair_bound(2, 100, 3).ln() == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(pair_bound(10, 10, 1).value() == doctest::Approx(1.0));
}

TEST_CASE("group constants") {
  for (std::int64_t k = 1; k <= 200; ++k) {
    CHECK(c_q(1, k).ln() == doctest::Approx(0.5 * std::log(double(k))).epsilon(1e-12));
  }
  for (std::int64_t k = 2; k <= 200; ++k) {
    CHECK(rel_gap(c_q(2, k), c_pair(k)) < 1e-12);
  }
  CHECK(c_q(8, 17).value() == doctest::Approx(4.1111).epsilon(5e-5));
  CHECK(c_q(23, 49).value() == doctest::Approx(6.9931).epsilon(5e-5));
  CHECK_THROWS_AS(c_q(0, 5), std::domain_error);
  CHECK_THROWS_AS(c_q(6, 5), std::domain_error);
}

TEST_CASE("q-row bound") {
  // q = 1 is plain Hadamard.
  CHECK(q_row_bound(20, 30, 5, 1).ln() ==
        doctest::Approx(hadamard_bound(20, 5).ln()).epsilon(1e-12));
  // q = 2 matches the pair bound.
  CHECK(q_row_bound(100, 100, 5, 2).ln() ==
        doctest::Approx(pair_bound(100, 100, 5).ln()).epsilon(1e-12));
  // Square case: c_{q,k}^n.
  CHECK(q_row_bound(1000, 1000, 17, 8).ln() ==
        doctest::Approx(1000.0 * c_q(8, 17).ln()).epsilon(1e-12));
  // Column average never exceeds q-1: Hadamard fallback.
  CHECK(q_row_bound(3, 100, 4, 4).ln() ==
        doctest::Approx(hadamard_bound(3, 4).ln()).epsilon(1e-12));
}

TEST_CASE("optimal group size") {
  CHECK(optimal_q(17).q == 8);
  CHECK(optimal_q(49).q == 23);
  const OptimalGroup g10 = optimal_q(10);
  CHECK(g10.q == 5);
  CHECK(g10.c.value() == doctest::Approx(3.1462).epsilon(5e-5));
  CHECK(optimal_q(1).q == 1);
  CHECK(optimal_q(2).q == 2);  // c_{2,2} < sqrt(2)
}

TEST_CASE("root of the group-ratio equation") {
  const double root = s_star(1e-12);
  CHECK(root == doctest::Approx(0.4395).epsilon(1e-4));
  const double residual = root * root * root + root - std::log1p(root) * (root + 1.0);
  CHECK(std::abs(residual) < 1e-10);
  // The optimal ratio approaches the root.
  CHECK(std::abs(double(optimal_q(1000).q) / 1000.0 - root) < 0.02);
  CHECK_THROWS_AS(s_star(0.0), std::domain_error);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(2) == Rational(3, 2));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK_THROWS_AS(harmonic(-1), std::domain_error);
}

TEST_CASE("greedy alpha and beta") {
  CHECK(greedy_alpha(3).value() == doctest::Approx(21.91).epsilon(5e-4));
  // beta_3 has the closed form (40/11)^(11/36) * 2^(7/36).
  const double beta3 = std::pow(40.0 / 11.0, 11.0 / 36.0) * std::pow(2.0, 7.0 / 36.0);
  CHECK(greedy_beta(3).value() == doctest::Approx(beta3).epsilon(1e-12));
  CHECK(rel_gap(greedy_alpha(17), 93.0 + std::log10(4.8887)) < 5e-5);
  CHECK(greedy_beta(17).value() == doctest::Approx(4.1104).epsilon(5e-5));
  CHECK(greedy_beta(10).value() == doctest::Approx(3.1447).epsilon(5e-5));
  CHECK_THROWS_AS(greedy_alpha(1), std::domain_error);
}

TEST_CASE("greedy closed bound") {
  // Square case collapses to alpha * beta^n.
  for (std::int64_t k : {2, 3, 5, 10}) {
    const double expect = greedy_alpha(k).ln() + 200.0 * greedy_beta(k).ln();
    CHECK(greedy_closed_bound(200, 200, k).ln() ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(rel_gap(greedy_closed_bound(1000, 1000, 17), 707.0 + std::log10(3.7674)) <
        5e-4);
  // Rectangular case evaluates the three-factor product; must be finite and
  // at least the Hadamard tail for sane inputs.
  const LogMagnitude rect = greedy_closed_bound(100, 200, 17);
  CHECK(std::isfinite(rect.ln()));
  CHECK(greedy_closed_bound(10, 100, 3).ln() >= 0.0);
}

TEST_CASE("perturbed pair constant") {
  CHECK(perturbed_bound(4, 0.01).value() == doctest::Approx(1.9892).epsilon(5e-5));
  CHECK(perturbed_bound(4, 0.01).value() < 2.02);
  for (std::int64_t k = 2; k <= 100; ++k) {
    CHECK(rel_gap(perturbed_bound(k, 0.0), c_pair(k)) < 1e-12);
  }
  // delta = o(1/k^2) keeps the bound below sqrt(k): delta = 1/k^3 grid.
  for (std::int64_t k = 10; k <= 200; ++k) {
    CHECK(perturbed_bound(k, 1.0 / double(k * k * k)).ln() <
          0.5 * std::log(double(k)));
  }
  CHECK_THROWS_AS(perturbed_bound(4, 1.0), std::domain_error);
  CHECK_THROWS_AS(perturbed_bound(1, 0.1), std::domain_error);
}

TEST_CASE("replication lower bounds") {
  CHECK(design_lower_bound(3).ln() ==
        doctest::Approx(std::log(24.0) / 7.0).epsilon(1e-14));
  CHECK(design_lower_bound(3).value() == doctest::Approx(1.5746).epsilon(5e-5));
  CHECK(design_lower_bound(2).ln() ==
        doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-14));
  CHECK(biplane_lower_bound().value() == doctest::Approx(1.9073).epsilon(5e-5));
  CHECK(biplane_lower_bound().ln() ==
        doctest::Approx(std::log(1215.0) / 11.0).epsilon(1e-14));
  // Lower bounds stay below the greedy upper rate.
  for (std::int64_t k = 3; k <= 10; ++k) {
    CHECK(design_lower_bound(k).ln() < greedy_beta(k).ln());
  }
}

TEST_CASE("closed-form determinant of the overlap matrix") {
  CHECK(det_s_formula(5, std::int64_t(0), 4) == BigInt(1024));  // k^n diagonal
  CHECK(det_s_formula(7, std::int64_t(1), 3) == 576);           // 24^2
  CHECK(det_s_formula(5, std::int64_t(2), 4) == 192);
  CHECK(det_s_formula(5, std::int64_t(2), 4) == det_exact(s_matrix(5, 2, 4)));
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t a = 0; a < k; ++a) {
        CHECK(det_s_formula(n, a, k) == det_exact(s_matrix(n, a, k)));
      }
    }
  }
}

TEST_CASE("real-argument overlap determinant") {
  // Agrees with the integer form on integer arguments.
  CHECK(det_s_formula(6, 2.0, 5).ln() ==
        doctest::Approx(std::log(det_s_formula(6, std::int64_t(2), 5)
                                     .convert_to<double>()))
            .epsilon(1e-12));
  CHECK(det_s_formula(4, 3.0, 3).is_zero());
  CHECK_THROWS_AS(det_s_formula(4, 3.5, 3), std::domain_error);

  // Strictly decreasing in the off-diagonal value below k.
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t k = 2; k <= 6; ++k) {
      double prev = det_s_formula(n, 0.0, k).ln();
      for (double x = 0.1; x < double(k) - 0.05; x += 0.1) {
        const double cur = det_s_formula(n, x, k).ln();
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("conjectural rate for real densities") {
  // Integer arguments collapse to the pair constant.
  for (std::int64_t k = 2; k <= 9; ++k) {
    CHECK(rel_gap(conjectured_dtilde(double(k)), c_pair(k)) < 1e-12);
  }

  // Linear-domain re-evaluation at k_tilde = 2.5 (k = 2, gamma = 0.5).
  const double direct = std::pow(std::sqrt(3.0), 0.25 - 0.25) *
                        std::pow(std::sqrt(2.0), 0.25) *
                        std::pow(std::sqrt(8.0), 0.25 - 1.0 / 6.0) *
                        std::pow(std::sqrt(3.0), 0.5 / 3.0);
  const LogMagnitude d25 = conjectured_dtilde(2.5);
  CHECK(d25.value() == doctest::Approx(direct).epsilon(1e-12));
  CHECK(d25.value() == doctest::Approx(1.3032196).epsilon(1e-6));
  CHECK(d25.ln() < c_pair(3).ln());

  // Monotone over a single unit interval.
  double prev = conjectured_dtilde(2.1).ln();
  for (double kt = 2.2; kt < 2.95; kt += 0.1) {
    const double cur = conjectured_dtilde(kt).ln();
    CHECK(prev < cur);
    prev = cur;
  }

  // Grid scan over (2,10): always below sqrt(k_tilde); below sqrt(floor)
  // everywhere except k_tilde = 2.9.
  for (int i = 21; i <= 99; ++i) {
    const double kt = double(i) / 10.0;
    const double d_ln = conjectured_dtilde(kt).ln();
    CHECK(d_ln < 0.5 * std::log(kt));
    const double floor_ln = 0.5 * std::log(std::floor(kt));
    if (i == 29) {
      CHECK(d_ln > floor_ln);
    } else {
      CHECK(d_ln < floor_ln);
    }
  }
  CHECK_THROWS_AS(conjectured_dtilde(1.0), std::domain_error);
}

TEST_CASE("pair bound versus ryser") {
  CHECK(compare_beats_ryser(1000, 3));
  CHECK_FALSE(compare_beats_ryser(7, 3));  // Ryser is tight at the plane
  // k = 3 flips at n = 26 and stays flipped.
  CHECK_FALSE(compare_beats_ryser(25, 3));
  CHECK(compare_beats_ryser(26, 3));
  // k = 4 flips at n = 70; spot checks out to 10^6.
  CHECK_FALSE(compare_beats_ryser(69, 4));
  for (std::int64_t n : {70, 71, 100, 1000, 10000, 100000, 1000000}) {
    CHECK(compare_beats_ryser(n, 4));
  }
}

TEST_CASE("total-ones bound for k = 2") {
  CHECK(t2_bound(6).value() == doctest::Approx(6.0));
  CHECK(t2_bound(12).value() == doctest::Approx(36.0));
}

TEST_CASE("constant ordering across k") {
  for (std::int64_t k = 3; k <= 200; ++k) {
    CHECK(greedy_beta(k).ln() < c_pair(k).ln());
    CHECK(c_pair(k).ln() < 0.5 * std::log(double(k)));
  }
  for (std::int64_t k = 3; k <= 27; ++k) {
    const OptimalGroup g = optimal_q(k);
    CHECK(greedy_beta(k).ln() < g.c.ln());
    // q* = 2 makes the two sides equal up to evaluation order.
    CHECK(g.c.ln() <= c_pair(k).ln() + 1e-12);
  }
  // Past k = 27 the best group constant drops below the greedy rate.
  CHECK(optimal_q(28).c.ln() < greedy_beta(28).ln());
}
