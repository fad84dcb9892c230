#pragma once

// Byte-deterministic CSV and JSON renderings of a VerificationReport.

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "format.hpp"
#include "titchmarsh.hpp"

namespace hlip {

namespace detail {

// JSON has no inf/nan: non-finite values become strings.
inline nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return fmt_double(x);
}

inline nlohmann::ordered_json json_array(const std::vector<double>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (double x : v) a.push_back(json_number(x));
  return a;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem_id"] = to_string(r.theorem_id);
  j["verdict"] = to_string(r.verdict);
  j["estimated_constant"] = detail::json_number(r.estimated_constant);
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  j["h_grid"] = detail::json_array(r.h_grid);
  j["ratios"] = detail::json_array(r.ratios);
  nlohmann::ordered_json tf = nlohmann::ordered_json::array();
  for (bool b : r.truncation_flags) tf.push_back(b);
  j["truncation_flags"] = tf;
  nlohmann::ordered_json ser = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.series) ser[k] = detail::json_array(v);
  j["series"] = ser;
  nlohmann::ordered_json dg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.diagnostics) dg[k] = v;
  j["diagnostics"] = dg;
  return j;
}

inline std::string to_json_string(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

// '#' header lines (alpha and radius first), then one row per h.
inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  auto cfg = [&](const std::string& k) {
    for (const auto& [key, v] : r.config)
      if (key == k) return v;
    return std::string("-");
  };
  os << "# alpha=" << cfg("alpha") << " radius=" << cfg("radius_lambda") << "\n";
  os << "# theorem=" << to_string(r.theorem_id) << " verdict=" << to_string(r.verdict)
     << " estimated_constant=" << fmt_double(r.estimated_constant) << "\n";
  for (const auto& [k, v] : r.config) os << "# " << k << "=" << v << "\n";
  for (const auto& [k, v] : r.diagnostics) os << "# diag " << k << "=" << v << "\n";
  os << "h,ratio,truncated";
  for (const auto& s : r.series) os << "," << s.first;
  os << "\n";
  for (std::size_t i = 0; i < r.h_grid.size(); ++i) {
    os << fmt_double(r.h_grid[i]) << "," << (i < r.ratios.size() ? fmt_double(r.ratios[i]) : "") << ","
       << (i < r.truncation_flags.size() && r.truncation_flags[i] ? 1 : 0);
    for (const auto& s : r.series) os << "," << (i < s.second.size() ? fmt_double(s.second[i]) : "");
    os << "\n";
  }
  return os.str();
}

}  // namespace hlip
