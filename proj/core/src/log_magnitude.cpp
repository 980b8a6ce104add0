#include "maxdet/log_magnitude.hpp"

#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <vector>

namespace maxdet {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn10 = 2.302585092994046;
}  // namespace

LogMagnitude LogMagnitude::from_ln(double ln_value) {
  if (std::isnan(ln_value)) throw std::domain_error("LogMagnitude: NaN log");
  LogMagnitude v;
  v.ln_ = ln_value;
  return v;
}

LogMagnitude LogMagnitude::from_value(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::domain_error("LogMagnitude: value must be >= 0");
  }
  if (value == 0.0) return zero();
  return from_ln(std::log(value));
}

LogMagnitude LogMagnitude::from_log10(double log10_value) {
  return from_ln(log10_value * kLn10);
}

LogMagnitude LogMagnitude::from_integer(const BigInt& value) {
  if (value < 0) throw std::domain_error("LogMagnitude: value must be >= 0");
  if (value == 0) return zero();
  if (boost::multiprecision::msb(value) < 900) {
    return from_value(value.convert_to<double>());
  }
  // Beyond double range: log of the leading 64 bits plus the shifted tail.
  std::vector<unsigned char> bytes;
  boost::multiprecision::export_bits(value, std::back_inserter(bytes), 8);
  double top = 0.0;
  const std::size_t take = std::min<std::size_t>(bytes.size(), 8);
  for (std::size_t i = 0; i < take; ++i) top = top * 256.0 + double(bytes[i]);
  return from_ln(std::log(top) +
                 static_cast<double>(bytes.size() - take) * 8.0 * kLn2);
}

double LogMagnitude::ln() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : ln_;
}

double LogMagnitude::log10() const { return ln() / kLn10; }

double LogMagnitude::value() const { return zero_ ? 0.0 : std::exp(ln_); }

LogMagnitude& LogMagnitude::operator*=(const LogMagnitude& rhs) {
  if (zero_ || rhs.zero_) {
    *this = zero();
  } else {
    ln_ += rhs.ln_;
  }
  return *this;
}

LogMagnitude& LogMagnitude::operator/=(const LogMagnitude& rhs) {
  if (rhs.zero_) throw std::domain_error("LogMagnitude: division by zero");
  if (!zero_) ln_ -= rhs.ln_;
  return *this;
}

LogMagnitude pow(const LogMagnitude& base, double exponent) {
  if (base.zero_) {
    if (exponent > 0.0) return LogMagnitude::zero();
    if (exponent == 0.0) return LogMagnitude::one();
    throw std::domain_error("LogMagnitude: 0 to a negative power");
  }
  return LogMagnitude::from_ln(base.ln_ * exponent);
}

bool operator<(const LogMagnitude& a, const LogMagnitude& b) {
  if (a.zero_) return !b.zero_;
  if (b.zero_) return false;
  return a.ln_ < b.ln_;
}

LogMagnitude::Scientific LogMagnitude::scientific(int significant_digits) const {
  if (significant_digits < 1 || significant_digits > 15) {
    throw std::invalid_argument("LogMagnitude: significant_digits in [1,15]");
  }
  if (zero_) return {0.0, 0};
  const double l10 = log10();
  long long e = static_cast<long long>(std::floor(l10));
  double mantissa = std::pow(10.0, l10 - static_cast<double>(e));
  const double scale = std::pow(10.0, significant_digits - 1);
  mantissa = std::round(mantissa * scale) / scale;
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    e += 1;
  }
  return {mantissa, e};
}

std::string LogMagnitude::str(int significant_digits) const {
  if (zero_) return "0";
  const Scientific s = scientific(significant_digits);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*fe%lld", significant_digits - 1, s.mantissa,
                s.exponent);
  return buf;
}

}  // namespace maxdet
