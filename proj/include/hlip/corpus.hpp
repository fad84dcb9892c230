#pragma once

// Named test functions used by the CLI and the test suites.

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "function.hpp"

namespace hlip {

namespace detail {

// C-infinity bump centred at c with half-width r, value 1 at the centre.
inline double compact_bump(double x, double c, double r) {
  const double s = (x - c) / r;
  if (std::fabs(s) >= 1) return 0;
  return std::exp(1 - 1 / (1 - s * s));
}

}  // namespace detail

inline std::vector<std::string> corpus_names() {
  return {"gauss_skew", "gauss", "bump", "bump_shifted", "sech", "gauss_cos"};
}

inline FunctionSpec corpus_function(const std::string& name) {
  if (name == "gauss_skew")  // rapidly decaying, not even
    return make_function([](double x) { return std::exp(-x * x / 4) * (1 + x / 4); }, 30, Smoothness::analytic);
  if (name == "gauss") return make_function([](double x) { return std::exp(-x * x); }, 30, Smoothness::analytic);
  if (name == "bump")
    return make_function([](double x) { return detail::compact_bump(x, 0, 3); }, 3, Smoothness::smooth_compact);
  if (name == "bump_shifted")
    return make_function([](double x) { return detail::compact_bump(x, 1, 2); }, 3, Smoothness::smooth_compact);
  if (name == "sech") return make_function([](double x) { return 1 / std::cosh(x); }, 30, Smoothness::analytic);
  if (name == "gauss_cos")
    return make_function([](double x) { return std::exp(-x * x / 8) * std::cos(2 * x); }, 30, Smoothness::analytic);
  std::string all;
  for (const auto& n : corpus_names()) all += (all.empty() ? "" : ", ") + n;
  throw config_error("unknown function '" + name + "' (known: " + all + ")");
}

}  // namespace hlip
