#include "maxdet/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace maxdet {

RemovalSchedule make_schedule(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1) throw std::domain_error("make_schedule: m must be >= 1");
  if (k < 1 || k > n) throw std::domain_error("make_schedule: need 1 <= k <= n");
  RemovalSchedule s;
  s.m = m;
  s.n = n;
  s.k = k;
  std::int64_t remaining = m;
  while (remaining > 0) {
    const std::int64_t step = (remaining * k + n - 1) / n;  // <= remaining since k <= n
    s.removals.push_back(step);
    remaining -= step;
  }
  s.r = s.removals.front();
  for (std::int64_t i = 1; i <= s.r; ++i) s.counts[i] = 0;
  for (std::int64_t q : s.removals) ++s.counts[q];
  s.checkpoints[s.r] = m;
  for (std::int64_t i = s.r; i >= 1; --i) {
    s.checkpoints[i - 1] = s.checkpoints[i] - i * s.counts[i];
  }
  return s;
}

LogMagnitude schedule_bound(const RemovalSchedule& schedule) {
  const double kd = double(schedule.k);
  double ln = 0.0;
  for (std::int64_t q : schedule.removals) {
    ln += 0.5 * std::log(double(q) + kd - 1.0);
    if (q > 1) ln += 0.5 * double(q - 1) * std::log(kd - 1.0);
  }
  return LogMagnitude::from_ln(ln);
}

CountWindow a_i_window(std::int64_t i, std::int64_t n, std::int64_t k) {
  if (i < 2) throw std::domain_error("a_i_window: i must be >= 2");
  if (n < 1 || k < 1) throw std::domain_error("a_i_window: n, k must be >= 1");
  CountWindow w;
  w.low = Rational(n, k * (i - 1)) - Rational(i, i - 1);
  w.high = Rational(n, k * (i - 1)) + 1;
  return w;
}

}  // namespace maxdet
