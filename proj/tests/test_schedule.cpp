#include <doctest.h>

#include <cmath>
#include <random>

#include "maxdet/bounds.hpp"
#include "maxdet/schedule.hpp"

using namespace maxdet;

TEST_CASE("reference schedule for 100 rows, 200 columns, k = 17") {
  const RemovalSchedule s = make_schedule(100, 200, 17);
  const std::vector<std::int64_t> expected = {9, 8, 8, 7, 6, 6, 5, 5, 4, 4, 4,
                                              3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1,
                                              1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(s.removals == expected);
  CHECK(s.r == 9);
  CHECK(s.counts.at(9) == 1);
  CHECK(s.counts.at(8) == 2);
  CHECK(s.counts.at(1) == 10);
}

TEST_CASE("reference counts for the square case n = 1000, k = 17") {
  const RemovalSchedule s = make_schedule(1000, 1000, 17);
  CHECK(s.r == 17);
  const std::pair<std::int64_t, std::int64_t> expected[] = {
      {17, 4}, {16, 4}, {15, 3}, {14, 5}, {13, 4}, {12, 5}, {11, 5}, {10, 6},
      {9, 7},  {8, 7},  {7, 8},  {6, 10}, {5, 12}, {4, 14}, {3, 20}, {2, 29},
      {1, 57}};
  for (const auto& [i, a] : expected) CHECK(s.counts.at(i) == a);
}

TEST_CASE("k = 1 schedules remove single rows") {
  const RemovalSchedule s = make_schedule(12, 12, 1);
  CHECK(s.removals == std::vector<std::int64_t>(12, 1));
  CHECK(schedule_bound(s).value() == doctest::Approx(1.0));
}

TEST_CASE("schedule invariants on a parameter grid") {
  std::mt19937 rng(321);
  for (int round = 0; round < 300; ++round) {
    const std::int64_t n = 2 + rng() % 400;
    const std::int64_t k = 1 + std::int64_t(rng() % std::uint32_t(n));
    const std::int64_t m = 1 + rng() % (2 * n);
    const RemovalSchedule s = make_schedule(m, n, k);

    std::int64_t total = 0;
    std::int64_t remaining = m;
    for (std::size_t i = 0; i < s.removals.size(); ++i) {
      total += s.removals[i];
      if (i > 0) CHECK(s.removals[i] <= s.removals[i - 1]);
      CHECK(s.removals[i] == (remaining * k + n - 1) / n);
      remaining -= s.removals[i];
    }
    CHECK(total == m);

    // Checkpoints telescope down to zero.
    CHECK(s.checkpoints.at(s.r) == m);
    CHECK(s.checkpoints.at(0) == 0);
    for (std::int64_t i = 1; i <= s.r; ++i) {
      CHECK(s.checkpoints.at(i - 1) == s.checkpoints.at(i) - i * s.counts.at(i));
    }
    std::int64_t weighted = 0;
    for (const auto& [i, a] : s.counts) weighted += i * a;
    CHECK(weighted == m);
  }
}

TEST_CASE("square schedules start with r = k") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    for (std::int64_t n : {20, 57, 100}) {
      if (k > n) continue;
      CHECK(make_schedule(n, n, k).r == k);
    }
  }
}

TEST_CASE("schedule bound reference value") {
  const LogMagnitude b = schedule_bound(make_schedule(1000, 1000, 17));
  const double ref = 612.0 + std::log10(9.3551);
  CHECK(std::abs(std::pow(10.0, b.log10() - ref) - 1.0) < 5e-4);
}

TEST_CASE("exact schedule product refines the closed forms") {
  // Against the best group bound at n = 1000.
  for (std::int64_t k = 3; k <= 17; ++k) {
    const LogMagnitude exact = schedule_bound(make_schedule(1000, 1000, k));
    const LogMagnitude grouped = q_row_bound(1000, 1000, k, optimal_q(k).q);
    CHECK(exact.ln() <= grouped.ln() + 1e-9);
  }
  // Against alpha * beta^n on the square grid.
  for (std::int64_t k = 3; k <= 10; ++k) {
    for (std::int64_t n : {50, 100, 500, 1000}) {
      const LogMagnitude exact = schedule_bound(make_schedule(n, n, k));
      const double closed = greedy_alpha(k).ln() + double(n) * greedy_beta(k).ln();
      CHECK(exact.ln() <= closed + 1e-9);
    }
  }
  // Against the closed greedy bound, square and rectangular.
  for (std::int64_t k = 3; k <= 10; ++k) {
    for (std::int64_t n = 50; n <= 200; n += 25) {
      for (std::int64_t m : {n, n / 2, (3 * n) / 4}) {
        const LogMagnitude exact = schedule_bound(make_schedule(m, n, k));
        const LogMagnitude closed = greedy_closed_bound(m, n, k);
        CHECK(exact.ln() <= closed.ln() + 1e-9);
      }
    }
  }
}

TEST_CASE("count windows") {
  // Window for a_1 at n = 1000, k = 17: (1000/17 - 2, 1000/17 + 1).
  const CountWindow w = a_i_window(2, 1000, 17);
  CHECK(w.low == Rational(1000, 17) - 2);
  CHECK(w.high == Rational(1000, 17) + 1);

  const RemovalSchedule s = make_schedule(1000, 1000, 17);
  // Every a_j with j < r lies strictly inside its window.
  for (std::int64_t j = 1; j < 17; ++j) {
    const CountWindow win = a_i_window(j + 1, 1000, 17);
    const Rational aj(s.counts.at(j));
    CHECK(win.low < aj);
    CHECK(aj < win.high);
  }
  // The first count satisfies a_k <= n/k^2 + 1.
  CHECK(Rational(s.counts.at(17)) <= Rational(1000, 17 * 17) + 1);

  CHECK_THROWS_AS(a_i_window(1, 100, 3), std::domain_error);
}
