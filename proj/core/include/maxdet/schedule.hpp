#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "maxdet/log_magnitude.hpp"
#include "maxdet/matrix.hpp"

namespace maxdet {

/// Greedy row-removal plan for an m x n matrix with row sums k: repeatedly
/// remove ceil((rows remaining) * k / n) rows that share a column of ones,
/// until none remain.
struct RemovalSchedule {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;  // first (largest) removal size, ceil(mk/n)

  std::vector<std::int64_t> removals;  // the sequence Q, nonincreasing

  // counts[i] = a_i, multiplicity of removal size i for i = 1..r (zeros kept).
  std::map<std::int64_t, std::int64_t> counts;

  // checkpoints[i] = m_i, rows remaining just before the size-i removals
  // begin; m_r = m, m_0 = 0, m_{i-1} = m_i - i * a_i.
  std::map<std::int64_t, std::int64_t> checkpoints;
};

/// Builds the schedule in exact integer arithmetic (ceil as (a+b-1)/b).
RemovalSchedule make_schedule(std::int64_t m, std::int64_t n, std::int64_t k);

/// Volume bound from the exact schedule: the product over entries q of Q of
/// sqrt((q+k-1)(k-1)^{q-1}), in log domain.
LogMagnitude schedule_bound(const RemovalSchedule& schedule);

struct CountWindow {
  Rational low;   // open lower bound
  Rational high;  // open upper bound
};

/// Open interval guaranteed to contain a_{i-1} for 2 <= i:
/// n/(k(i-1)) - i/(i-1) < a_{i-1} < n/(k(i-1)) + 1.
CountWindow a_i_window(std::int64_t i, std::int64_t n, std::int64_t k);

}  // namespace maxdet
