#pragma once

#include <string>

#include "maxdet/matrix.hpp"

namespace maxdet {

/// A nonnegative real stored as its natural logarithm, so that products,
/// powers and comparisons of values around 10^700 never leave binary64
/// range. Zero is carried as an explicit flag.
///
/// Default-constructed value is 1 (the multiplicative identity).
class LogMagnitude {
 public:
  LogMagnitude() = default;

  static LogMagnitude zero() {
    LogMagnitude v;
    v.zero_ = true;
    v.ln_ = 0.0;
    return v;
  }
  static LogMagnitude one() { return LogMagnitude(); }
  static LogMagnitude from_ln(double ln_value);
  static LogMagnitude from_value(double value);       // value >= 0
  static LogMagnitude from_log10(double log10_value);
  static LogMagnitude from_integer(const BigInt& value);  // value >= 0

  bool is_zero() const { return zero_; }
  double ln() const;     // -infinity when zero
  double log10() const;  // -infinity when zero
  double value() const;  // may overflow to +infinity

  LogMagnitude& operator*=(const LogMagnitude& rhs);
  LogMagnitude& operator/=(const LogMagnitude& rhs);  // rhs must be nonzero
  friend LogMagnitude operator*(LogMagnitude a, const LogMagnitude& b) {
    a *= b;
    return a;
  }
  friend LogMagnitude operator/(LogMagnitude a, const LogMagnitude& b) {
    a /= b;
    return a;
  }

  /// base^exponent in log domain. 0^e is 0 for e > 0, 1 for e == 0, and a
  /// domain error for e < 0.
  friend LogMagnitude pow(const LogMagnitude& base, double exponent);

  friend bool operator<(const LogMagnitude& a, const LogMagnitude& b);
  friend bool operator>(const LogMagnitude& a, const LogMagnitude& b) { return b < a; }
  friend bool operator<=(const LogMagnitude& a, const LogMagnitude& b) { return !(b < a); }
  friend bool operator>=(const LogMagnitude& a, const LogMagnitude& b) { return !(a < b); }
  friend bool operator==(const LogMagnitude& a, const LogMagnitude& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.ln_ == b.ln_);
  }

  /// Decomposition value = mantissa * 10^exponent with mantissa in [1,10),
  /// mantissa rounded to the requested number of significant digits.
  /// Zero decomposes as {0, 0}.
  struct Scientific {
    double mantissa = 0.0;
    long long exponent = 0;
  };
  Scientific scientific(int significant_digits = 5) const;

  /// Rendering like "9.3551e612"; "0" for zero.
  std::string str(int significant_digits = 5) const;

 private:
  bool zero_ = false;
  double ln_ = 0.0;
};

}  // namespace maxdet
