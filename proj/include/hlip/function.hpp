#pragma once

#include <functional>
#include <memory>
#include <string>

namespace hlip {

struct SpectralData;

enum class Smoothness { smooth_compact, spectral_synthesized, analytic };

inline std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth_compact: return "smooth_compact";
    case Smoothness::spectral_synthesized: return "spectral_synthesized";
    default: return "analytic";
  }
}

// Real function on the line. `source` is set when the function was produced
// by an inverse transform, so its exact spectrum stays available.
struct FunctionSpec {
  std::function<double(double)> evaluator;
  double support_radius = 0;
  Smoothness smoothness_tag = Smoothness::analytic;
  std::shared_ptr<const SpectralData> source;

  double operator()(double x) const { return evaluator(x); }
};

inline FunctionSpec make_function(std::function<double(double)> fn, double support_radius,
                                  Smoothness tag = Smoothness::analytic) {
  return FunctionSpec{std::move(fn), support_radius, tag, nullptr};
}

}  // namespace hlip
