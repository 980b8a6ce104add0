#include "maxdet/report.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace maxdet {

namespace {

using nlohmann::json;

double round_decimals(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

json params_to_json(const BoundParams& p) {
  json j = json::object();
  if (p.m) j["m"] = *p.m;
  if (p.n) j["n"] = *p.n;
  j["k"] = p.k;
  if (p.q) j["q"] = *p.q;
  if (p.delta) j["delta"] = *p.delta;
  if (p.k_tilde) j["k_tilde"] = *p.k_tilde;
  return j;
}

BoundParams params_from_json(const json& j) {
  BoundParams p;
  if (j.contains("m")) p.m = j.at("m").get<std::int64_t>();
  if (j.contains("n")) p.n = j.at("n").get<std::int64_t>();
  p.k = j.at("k").get<std::int64_t>();
  if (j.contains("q")) p.q = j.at("q").get<std::int64_t>();
  if (j.contains("delta")) p.delta = j.at("delta").get<double>();
  if (j.contains("k_tilde")) p.k_tilde = j.at("k_tilde").get<double>();
  return p;
}

json report_to_json(const BoundReport& r) {
  json j;
  j["name"] = r.name;
  j["params"] = params_to_json(r.params);
  if (r.value.is_zero()) {
    j["log10_value"] = nullptr;
    j["mantissa"] = 0.0;
    j["exponent"] = 0;
  } else {
    const LogMagnitude::Scientific s = r.value.scientific(5);
    j["log10_value"] = round_decimals(r.value.log10(), 12);
    j["mantissa"] = s.mantissa;
    j["exponent"] = s.exponent;
  }
  j["kind"] = to_string(r.kind);
  return j;
}

BoundReport report_from_json(const json& j) {
  BoundReport r;
  r.name = j.at("name").get<std::string>();
  r.params = params_from_json(j.at("params"));
  if (j.at("log10_value").is_null()) {
    r.value = LogMagnitude::zero();
  } else {
    r.value = LogMagnitude::from_log10(j.at("log10_value").get<double>());
  }
  r.kind = bound_kind_from_string(j.at("kind").get<std::string>());
  return r;
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::conjectural_upper: return "conjectural-upper";
  }
  return "?";
}

BoundKind bound_kind_from_string(const std::string& s) {
  if (s == "upper") return BoundKind::upper;
  if (s == "lower") return BoundKind::lower;
  if (s == "conjectural-upper") return BoundKind::conjectural_upper;
  throw std::invalid_argument("unknown bound kind: " + s);
}

std::string to_json_string(const BoundReport& report) {
  return report_to_json(report).dump();
}

std::string to_json_string(const std::vector<BoundReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump();
}

BoundReport bound_report_from_json(const std::string& json_text) {
  return report_from_json(json::parse(json_text));
}

std::vector<BoundReport> bound_reports_from_json(const std::string& json_text) {
  const json arr = json::parse(json_text);
  std::vector<BoundReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

}  // namespace maxdet
