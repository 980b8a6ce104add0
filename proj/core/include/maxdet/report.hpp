#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/log_magnitude.hpp"

namespace maxdet {

enum class BoundKind { upper, lower, conjectural_upper };

const char* to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& s);

struct BoundParams {
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> n;
  std::int64_t k = 0;
  std::optional<std::int64_t> q;
  std::optional<double> delta;
  std::optional<double> k_tilde;

  bool operator==(const BoundParams&) const = default;
};

struct BoundReport {
  std::string name;
  BoundParams params;
  LogMagnitude value;
  BoundKind kind = BoundKind::upper;
};

/// JSON object {name, params, log10_value, mantissa, exponent, kind}.
/// Mantissas are rounded to 5 significant figures and log10 values to 12
/// decimals, so that serialize(parse(x)) == x byte for byte.
std::string to_json_string(const BoundReport& report);
std::string to_json_string(const std::vector<BoundReport>& reports);
BoundReport bound_report_from_json(const std::string& json_text);
std::vector<BoundReport> bound_reports_from_json(const std::string& json_text);

}  // namespace maxdet
