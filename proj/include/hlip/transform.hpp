#pragma once

// Deformed Hankel transform on weighted grids, translation through the
// multiplier B_alpha(lambda h), and translation-difference norms.

#include <cmath>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "format.hpp"
#include "function.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace hlip {

struct SpectralData {
  double alpha = 0.5;
  WeightedGrid lambda_grid;
  std::vector<double> values;

  void validate() const {
    if (values.size() != lambda_grid.size()) throw config_error("spectral data: value count does not match grid");
    if (alpha != lambda_grid.alpha) throw config_error("spectral data: alpha differs from grid alpha");
  }
};

struct TailEnergy {
  double value = 0;
  bool truncated = false;  // 1/h at or beyond the frequency radius
};

// Holds both grids and, when it fits in memory, the dense kernel matrix
// K(i, j) = B_alpha(x_i lambda_j) built on first use.
class TransformPlan {
 public:
  static constexpr double kMatrixBudgetBytes = 1.5e9;

  TransformPlan(WeightedGrid xg, WeightedGrid lg, KernelParams kp = {})
      : xg_(std::move(xg)), lg_(std::move(lg)), kp_(adjust(kp, xg_.alpha)), kernel_(kp_) {
    if (xg_.alpha != lg_.alpha) throw config_error("transform: x and lambda grids use different alpha");
  }

  const WeightedGrid& xgrid() const { return xg_; }
  const WeightedGrid& lgrid() const { return lg_; }
  const Kernel& kernel() const { return kernel_; }
  double alpha() const { return xg_.alpha; }

  bool stores_matrix() const {
    return static_cast<double>(xg_.size()) * static_cast<double>(lg_.size()) * sizeof(double) <= kMatrixBudgetBytes;
  }

  // out_i = sum_j K(i,j) c_j  (synthesis on x nodes)
  std::vector<double> to_x(std::span<const double> c) const {
    if (c.size() != lg_.size()) throw config_error("transform: coefficient count does not match lambda grid");
    const std::size_t nx = xg_.size(), nl = lg_.size();
    std::vector<double> out(nx);
    if (stores_matrix()) {
      const std::vector<double>& K = matrix();
      parallel_for(nx, [&](std::size_t i) {
        const double* row = K.data() + i * nl;
        double s = 0;
        for (std::size_t j = 0; j < nl; ++j) s += row[j] * c[j];
        out[i] = s;
      });
    } else {
      parallel_for(nx, [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = 0; j < nl; ++j)
          if (c[j] != 0) s += kernel_(xg_.nodes[i] * lg_.nodes[j]) * c[j];
        out[i] = s;
      });
    }
    return out;
  }

  // out_j = sum_i K(i,j) c_i  (analysis on lambda nodes)
  std::vector<double> to_lambda(std::span<const double> c) const {
    if (c.size() != xg_.size()) throw config_error("transform: coefficient count does not match x grid");
    const std::size_t nx = xg_.size(), nl = lg_.size();
    std::vector<double> out(nl);
    if (stores_matrix()) {
      // Column blocks keep row access contiguous; each out_j still sums over i
      // in ascending order, independent of the thread count.
      const std::vector<double>& K = matrix();
      constexpr std::size_t block = 256;
      parallel_for((nl + block - 1) / block, [&](std::size_t b) {
        const std::size_t lo = b * block, hi = std::min(nl, lo + block);
        for (std::size_t i = 0; i < nx; ++i) {
          const double ci = c[i];
          const double* row = K.data() + i * nl;
          for (std::size_t j = lo; j < hi; ++j) out[j] += row[j] * ci;
        }
      });
    } else {
      parallel_for(nl, [&](std::size_t j) {
        double s = 0;
        for (std::size_t i = 0; i < nx; ++i)
          if (c[i] != 0) s += kernel_(xg_.nodes[i] * lg_.nodes[j]) * c[i];
        out[j] = s;
      });
    }
    return out;
  }

  const std::vector<double>& matrix() const {
    std::call_once(built_, [this] {
      const std::size_t nx = xg_.size(), nl = lg_.size();
      K_.resize(nx * nl);
      parallel_for(nx, [&](std::size_t i) {
        double* row = K_.data() + i * nl;
        for (std::size_t j = 0; j < nl; ++j) row[j] = kernel_(xg_.nodes[i] * lg_.nodes[j]);
      });
    });
    return K_;
  }

 private:
  static KernelParams adjust(KernelParams kp, double alpha) {
    kp.alpha = alpha;
    return kp;
  }

  WeightedGrid xg_, lg_;
  KernelParams kp_;
  Kernel kernel_;
  mutable std::once_flag built_;
  mutable std::vector<double> K_;
};

inline SpectralData forward(const FunctionSpec& f, const TransformPlan& plan) {
  const WeightedGrid& xg = plan.xgrid();
  std::vector<double> c = sample(f, xg);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= xg.weights[i];
  return SpectralData{plan.alpha(), plan.lgrid(), plan.to_lambda(c)};
}

inline SpectralData forward(const FunctionSpec& f, const WeightedGrid& xg, const WeightedGrid& lg,
                            KernelParams kp = {}) {
  if (xg.alpha != lg.alpha) throw config_error("forward: x and lambda grids use different alpha");
  const Kernel K(KernelParams{xg.alpha, kp.series_tol, kp.asymptotic_switch});
  std::vector<double> c = sample(f, xg);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= xg.weights[i];
  SpectralData out{xg.alpha, lg, std::vector<double>(lg.size())};
  parallel_for(lg.size(), [&](std::size_t j) {
    double s = 0;
    for (std::size_t i = 0; i < xg.size(); ++i) s += K(lg.nodes[j] * xg.nodes[i]) * c[i];
    out.values[j] = s;
  });
  return out;
}

inline FunctionSpec inverse(const SpectralData& g, const WeightedGrid& xg, KernelParams kp = {}) {
  g.validate();
  if (xg.alpha != g.alpha) throw config_error("inverse: grid alpha differs from spectral alpha");
  auto src = std::make_shared<const SpectralData>(g);
  auto K = std::make_shared<const Kernel>(KernelParams{g.alpha, kp.series_tol, kp.asymptotic_switch});
  std::vector<double> c(g.values.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = g.lambda_grid.weights[j] * g.values[j];
  auto coef = std::make_shared<const std::vector<double>>(std::move(c));
  FunctionSpec f;
  f.evaluator = [src, K, coef](double x) {
    const auto& l = src->lambda_grid.nodes;
    double s = 0;
    for (std::size_t j = 0; j < l.size(); ++j)
      if ((*coef)[j] != 0) s += (*K)(l[j] * x) * (*coef)[j];
    return s;
  };
  f.support_radius = xg.radius;
  f.smoothness_tag = Smoothness::spectral_synthesized;
  f.source = src;
  return f;
}

inline FunctionSpec inverse(const SpectralData& g, const TransformPlan& plan) {
  return inverse(g, plan.xgrid(), plan.kernel().params());
}

// Spectrum of f on the plan's frequency grid. A function built by inverse()
// on the same frequency grid carries its exact spectrum (the transform is
// self-inverse); anything else is transformed by quadrature.
inline SpectralData spectrum_of(const FunctionSpec& f, const TransformPlan& plan) {
  if (f.source && f.source->lambda_grid.same_layout(plan.lgrid())) return *f.source;
  return forward(f, plan);
}

inline FunctionSpec scaled(const FunctionSpec& f, double c) {
  FunctionSpec out = f;
  auto fn = f.evaluator;
  out.evaluator = [fn, c](double x) { return c * fn(x); };
  if (f.source) {
    auto s = std::make_shared<SpectralData>(*f.source);
    for (double& v : s->values) v *= c;
    out.source = s;
  }
  return out;
}

inline TailEnergy tail_energy(const SpectralData& g, double h, double q) {
  if (!(h > 0)) throw domain_error("tail_energy: h must be positive");
  if (!(q >= 1)) throw domain_error("tail_energy: exponent must be at least 1");
  g.validate();
  TailEnergy r;
  const double cut = 1.0 / h;
  if (cut >= g.lambda_grid.radius) {
    r.truncated = true;
    return r;
  }
  for (std::size_t j = 0; j < g.values.size(); ++j)
    if (std::fabs(g.lambda_grid.nodes[j]) >= cut)
      r.value += g.lambda_grid.weights[j] * std::pow(std::fabs(g.values[j]), q);
  return r;
}

// values_j * B_alpha(lambda_j h)
inline SpectralData multiplied(const SpectralData& g, double h, const Kernel& K) {
  SpectralData out = g;
  for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] *= K(g.lambda_grid.nodes[j] * h);
  return out;
}

inline FunctionSpec translate(const FunctionSpec& f, double h, const TransformPlan& plan) {
  return inverse(multiplied(spectrum_of(f, plan), h, plan.kernel()), plan);
}

enum class DiffRoute { physical, spectral };

// ||T_h f - f||_{p,alpha}. The physical route synthesizes
// (B(lambda h) - 1) F(f) on the x grid and integrates |.|^p there; the spectral
// route (p = 2 only) sums |1 - B(lambda h)|^2 |F(f)|^2 over the frequency grid.
inline std::vector<double> diff_norms(const FunctionSpec& f, std::span<const double> hs, double p,
                                      const TransformPlan& plan, DiffRoute route) {
  if (!(p > 1 && p <= 2)) throw domain_error("diff_norm: p must lie in (1, 2]");
  if (route == DiffRoute::spectral && p != 2) throw domain_error("diff_norm: spectral route requires p = 2");
  const SpectralData F = spectrum_of(f, plan);
  const WeightedGrid& lg = F.lambda_grid;
  const Kernel& K = plan.kernel();
  std::vector<double> out;
  out.reserve(hs.size());
  for (double h : hs) {
    if (!(h >= 0)) throw domain_error("diff_norm: h must be nonnegative");
    if (route == DiffRoute::spectral) {
      double s = 0;
      for (std::size_t j = 0; j < F.values.size(); ++j) {
        const double d = (1.0 - K(lg.nodes[j] * h)) * F.values[j];
        s += lg.weights[j] * d * d;
      }
      out.push_back(std::sqrt(s));
    } else {
      std::vector<double> c(F.values.size());
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = lg.weights[j] * (K(lg.nodes[j] * h) - 1.0) * F.values[j];
      const std::vector<double> d = plan.to_x(c);
      out.push_back(weighted_norm(d, plan.xgrid(), p));
    }
  }
  return out;
}

inline double diff_norm(const FunctionSpec& f, double h, double p, const TransformPlan& plan,
                        DiffRoute route = DiffRoute::physical) {
  const double hs[1] = {h};
  return diff_norms(f, hs, p, plan, route)[0];
}

// CSV: `# alpha=<a> radius=<R>` header, then lambda,value rows.
inline void write_csv(const SpectralData& g, std::ostream& os) {
  os << "# alpha=" << fmt_double(g.alpha) << " radius=" << fmt_double(g.lambda_grid.radius) << "\n";
  os << "# panels=" << g.lambda_grid.panels << " order=" << g.lambda_grid.order << "\n";
  os << "lambda,value\n";
  for (std::size_t j = 0; j < g.values.size(); ++j)
    os << fmt_double(g.lambda_grid.nodes[j]) << "," << fmt_double(g.values[j]) << "\n";
}

inline SpectralData read_csv(std::istream& is) {
  double alpha = 0, radius = 0;
  int panels = 0, order = 0;
  std::vector<double> vals;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string tok;
      while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "alpha") alpha = std::stod(v);
        else if (k == "radius") radius = std::stod(v);
        else if (k == "panels") panels = std::stoi(v);
        else if (k == "order") order = std::stoi(v);
      }
      continue;
    }
    if (line.rfind("lambda", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw config_error("spectral csv: malformed row '" + line + "'");
    vals.push_back(std::stod(line.substr(comma + 1)));
  }
  if (panels < 2 || order < 2) throw config_error("spectral csv: missing panels/order header");
  SpectralData g{alpha, build_weighted_grid(alpha, radius, panels, order), std::move(vals)};
  g.validate();
  return g;
}

struct GridConfig {
  double alpha = 0.5;
  double radius_x = 20;
  double radius_lambda = 64;
  int panels = 64;
  int order = 16;
  double asymptotic_switch = 20;
};

// Both grids share panel count and order.
inline TransformPlan make_plan(const GridConfig& c) {
  KernelParams kp;
  kp.alpha = c.alpha;
  kp.asymptotic_switch = c.asymptotic_switch;
  kp.validate();
  return TransformPlan(build_weighted_grid(c.alpha, c.radius_x, c.panels, c.order),
                       build_weighted_grid(c.alpha, c.radius_lambda, c.panels, c.order), kp);
}

}  // namespace hlip
