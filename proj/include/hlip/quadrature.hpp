#pragma once

// Discretization of c_alpha |x|^{2 alpha - 1} dx on [-R, R].
//
// Panels are graded quadratically (breakpoints R (k/P)^2, i.e. uniform in
// sqrt|x|), which matches the sqrt(lambda x) phase of the kernel. The panel
// touching 0 uses a Gauss-Jacobi rule that absorbs the singular weight; outer
// panels use Gauss-Legendre with the weight folded in. Weights include c_alpha.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "function.hpp"
#include "parallel.hpp"
#include "specfun.hpp"

namespace hlip {

struct GaussRule {
  std::vector<double> x, w;
};

// n-point rule for the weight (1-x)^a (1+x)^b on [-1, 1] (Golub-Welsch).
inline GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw config_error("gauss_jacobi: need at least one node");
  if (!(a > -1 && b > -1)) throw config_error("gauss_jacobi: exponents must exceed -1");
  Eigen::VectorXd diag(n), off(std::max(n - 1, 1));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (k == 0) ? (b - a) / (ab + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = s * s * (s + 1) * (s - 1);
    off(k - 1) = std::sqrt(num / den);
  }
  const double mu0 = std::exp((ab + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) -
                              std::lgamma(ab + 2));
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  if (n == 1) {
    r.x[0] = diag(0);
    r.w[0] = mu0;
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off.head(n - 1), Eigen::ComputeEigenvectors);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v * v;
  }
  return r;
}

inline GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0, 0); }

struct WeightedGrid {
  double alpha = 0.5;
  double radius = 1;
  std::vector<double> nodes;
  std::vector<double> weights;
  int cell_count = 0;
  int panels = 0;
  int order = 0;

  std::size_t size() const { return nodes.size(); }
  double mass() const {
    double s = 0;
    for (double w : weights) s += w;
    return s;
  }
  bool same_layout(const WeightedGrid& o) const {
    return alpha == o.alpha && radius == o.radius && panels == o.panels && order == o.order;
  }
};

inline WeightedGrid build_weighted_grid(double alpha, double radius, int panels, int order) {
  if (!(alpha > 0.25)) throw config_error("grid: alpha must exceed 1/4");
  if (!(radius > 0)) throw config_error("grid: radius must be positive");
  if (panels < 2) throw config_error("grid: need at least 2 panels");
  if (order < 2) throw config_error("grid: order must be at least 2");

  const double ca = c_alpha(alpha);
  const double e = 2 * alpha - 1;
  std::vector<double> br(panels + 1);
  for (int k = 0; k <= panels; ++k) {
    const double s = static_cast<double>(k) / panels;
    br[k] = radius * s * s;
  }
  br[panels] = radius;

  std::vector<double> xs, ws;
  xs.reserve(static_cast<std::size_t>(panels) * order);
  ws.reserve(xs.capacity());

  const GaussRule jac = gauss_jacobi(order, 0.0, e);
  const double half0 = br[1] / 2;
  const double scale0 = std::pow(half0, 2 * alpha);
  for (int i = 0; i < order; ++i) {
    xs.push_back(half0 * (1 + jac.x[i]));
    ws.push_back(ca * jac.w[i] * scale0);
  }
  const GaussRule leg = gauss_legendre(order);
  for (int k = 1; k < panels; ++k) {
    const double lo = br[k], hi = br[k + 1], half = (hi - lo) / 2;
    for (int i = 0; i < order; ++i) {
      const double x = lo + half * (1 + leg.x[i]);
      xs.push_back(x);
      ws.push_back(ca * leg.w[i] * half * std::pow(x, e));
    }
  }

  WeightedGrid g;
  g.alpha = alpha;
  g.radius = radius;
  g.panels = panels;
  g.order = order;
  g.cell_count = 2 * panels;
  const std::size_t n = xs.size();
  g.nodes.resize(2 * n);
  g.weights.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes[n - 1 - i] = -xs[i];
    g.weights[n - 1 - i] = ws[i];
    g.nodes[n + i] = xs[i];
    g.weights[n + i] = ws[i];
  }
  return g;
}

// f evaluated at every node.
inline std::vector<double> sample(const FunctionSpec& f, const WeightedGrid& g) {
  std::vector<double> v(g.size());
  parallel_for(g.size(), [&](std::size_t i) { v[i] = f(g.nodes[i]); });
  for (double x : v)
    if (!std::isfinite(x)) throw evaluation_error("sample: function returned a non-finite value");
  return v;
}

inline double weighted_norm(std::span<const double> values, const WeightedGrid& g, double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw domain_error("weighted_norm: need 1 <= p < inf");
  if (values.size() != g.size()) throw config_error("weighted_norm: value count does not match grid");
  // Scale by the largest magnitude so high p cannot overflow.
  double m = 0;
  for (double v : values) m = std::max(m, std::fabs(v));
  if (m == 0) return 0;
  double s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) s += g.weights[i] * std::pow(std::fabs(values[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

inline double weighted_norm(const FunctionSpec& f, const WeightedGrid& g, double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw domain_error("weighted_norm: need 1 <= p < inf");
  const std::vector<double> v = sample(f, g);
  return weighted_norm(v, g, p);
}

}  // namespace hlip
