#pragma once

// Verifiers for the Titchmarsh-type theorems: DLip smoothness against
// spectral tail decay, estimated on the dyadic grid h = 2^-k delta0.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "format.hpp"
#include "modulus.hpp"
#include "transform.hpp"

namespace hlip {

enum class TheoremId { main1_part1, main1_part2, equivalence, fourier_Lnu, main2_part1, main2_part2, inclusion_Womega };
enum class Verdict { bounded, unbounded, inconclusive, hypothesis_failed };

inline std::string to_string(TheoremId t) {
  switch (t) {
    case TheoremId::main1_part1: return "main1_part1";
    case TheoremId::main1_part2: return "main1_part2";
    case TheoremId::equivalence: return "equivalence";
    case TheoremId::fourier_Lnu: return "fourier_Lnu";
    case TheoremId::main2_part1: return "main2_part1";
    case TheoremId::main2_part2: return "main2_part2";
    default: return "inclusion_Womega";
  }
}

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::unbounded: return "unbounded";
    case Verdict::inconclusive: return "inconclusive";
    default: return "hypothesis_failed";
  }
}

inline TheoremId parse_theorem(const std::string& s) {
  for (TheoremId t : {TheoremId::main1_part1, TheoremId::main1_part2, TheoremId::equivalence, TheoremId::fourier_Lnu,
                      TheoremId::main2_part1, TheoremId::main2_part2, TheoremId::inclusion_Womega})
    if (to_string(t) == s) return t;
  throw config_error("unknown theorem '" + s + "'");
}

struct VerificationReport {
  TheoremId theorem_id = TheoremId::main1_part1;
  std::vector<double> h_grid;
  std::vector<double> ratios;
  double estimated_constant = 0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<bool> truncation_flags;
  // resolved configuration and free-form diagnostics, in insertion order
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> diagnostics;
  // auxiliary per-h traces (same length as h_grid)
  std::vector<std::pair<std::string, std::vector<double>>> series;

  void diag(const std::string& k, const std::string& v) { diagnostics.emplace_back(k, v); }
  void diag(const std::string& k, double v) { diagnostics.emplace_back(k, fmt_double(v)); }
  std::string diagnostic(const std::string& k) const {
    for (const auto& [key, v] : diagnostics)
      if (key == k) return v;
    return {};
  }
  const std::vector<double>* find_series(const std::string& k) const {
    for (const auto& [key, v] : series)
      if (key == k) return &v;
    return nullptr;
  }
};

// h_k = 2^-k delta0 for k = kmin..kmax (decreasing h)
inline std::vector<double> dyadic_h_grid(double delta0, int kmin = 3, int kmax = 10) {
  if (kmax < kmin) throw config_error("h grid: need kmin <= kmax");
  std::vector<double> h;
  for (int k = kmin; k <= kmax; ++k) h.push_back(std::ldexp(delta0, -k));
  return h;
}

// Frequency radius that keeps every tail 1/h resolved: 4 / h_min.
inline double auto_lambda_radius(double delta0, int kmax) { return 4.0 / std::ldexp(delta0, -kmax); }

// Least-squares slope of ln ratio against ln h over the positive entries.
inline double loglog_slope(std::span<const double> h, std::span<const double> r) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(r[i] > 0)) continue;
    const double x = std::log(h[i]), y = std::log(r[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++n;
  }
  if (n < 2) return 0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Boundedness rule on a ratio trace ordered by decreasing h. Values below
// `floor` are treated as zero (roundoff level).
//   bounded:   the running sup varies by less than 10x and the last three
//              steps are not all growing by more than 5%;
//   unbounded: the running sup grew 10x and the trace still sits near its
//              sup, or the last three steps all grow by more than 5% with a
//              log-log slope below -0.1.
inline Verdict classify_ratios(const std::vector<double>& raw, double floor = 0,
                               std::span<const double> h = {}) {
  if (raw.empty()) return Verdict::inconclusive;
  std::vector<double> r(raw);
  for (double& v : r) {
    if (!std::isfinite(v)) return Verdict::unbounded;
    if (std::fabs(v) <= floor) v = 0;
  }
  const std::size_t n = r.size();
  std::size_t first = 0;
  while (first < n && r[first] == 0) ++first;
  if (first == n) return Verdict::bounded;
  double sup = 0;
  for (std::size_t i = first; i < n; ++i) sup = std::max(sup, r[i]);
  const double spread = sup / r[first];
  bool blowup = n >= 4;
  for (std::size_t i = n - 3; blowup && i < n; ++i) blowup = r[i] > 1.05 * r[i - 1];
  if (spread < 10 && !blowup) return Verdict::bounded;
  if (spread >= 10 && r[n - 1] >= 0.5 * sup) return Verdict::unbounded;
  if (blowup) {
    // default abscissa: dyadic steps
    std::vector<double> hh(h.begin(), h.end());
    if (hh.size() != n) {
      hh.resize(n);
      for (std::size_t i = 0; i < n; ++i) hh[i] = std::ldexp(1.0, -static_cast<int>(i));
    }
    if (loglog_slope(hh, r) < -0.1) return Verdict::unbounded;
  }
  return Verdict::inconclusive;
}

// ---------------------------------------------------------------------------

struct Seminorm {
  double value = 0;
  std::vector<double> ratios;
};

// sup over h_grid of ||T_h f - f||_p / w(h). p = 2 uses the spectral sum.
inline Seminorm dlip_seminorm(const FunctionSpec& f, const ModulusSpec& w, double p, std::span<const double> h_grid,
                              const TransformPlan& plan) {
  if (!(p > 1 && p <= 2)) throw domain_error("dlip_seminorm: p must lie in (1, 2]");
  for (double h : h_grid)
    if (!(h > 0 && h <= w.delta0)) throw domain_error("dlip_seminorm: h grid must lie in (0, delta0]");
  const DiffRoute route = p == 2 ? DiffRoute::spectral : DiffRoute::physical;
  const std::vector<double> d = diff_norms(f, h_grid, p, plan, route);
  Seminorm s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    s.ratios.push_back(d[k] / w(h_grid[k]));
    s.value = std::max(s.value, s.ratios.back());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Test spectra with a prescribed tail

enum class Profile { sharp_tail, smooth_tail };

inline std::string to_string(Profile p) { return p == Profile::sharp_tail ? "sharp_tail" : "smooth_tail"; }

struct SynthesisSpec {
  ModulusSpec modulus;
  double alpha = 0.5;
  double lambda_radius = 64;
  Profile profile = Profile::smooth_tail;
  // smooth_tail only: frequency above which the tail equals w^2(1/y)
  // exactly (0 selects 4/delta0)
  double match_from = 0;
};

namespace detail {

// C-infinity step: 0 for x <= 0, 1 for x >= 1.
inline double smooth_step(double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double a = std::exp(-1 / x), b = std::exp(-1 / (1 - x));
  return a / (a + b);
}

// Tail profile Phi_mod(y): equals Phi(y) = w^2(1/y) on the matched range.
class TailProfile {
 public:
  TailProfile(const SynthesisSpec& s, double lambda_radius) : w_(s.modulus), L_(lambda_radius), prof_(s.profile) {
    ymin_ = 1 / w_.delta0;
    if (prof_ == Profile::smooth_tail) {
      y0_ = s.match_from > 0 ? s.match_from : 4 / w_.delta0;
      if (y0_ < ymin_) throw config_error("synthesis: match_from below 1/delta0");
      if (y0_ >= L_ / 2) throw config_error("synthesis: lambda radius too small for the matched range");
      // density -Phi' and its log-slope at y0 for a C^1 low-frequency extension
      const double v = std::log(y0_), hd = 1e-3;
      const double p0 = lnphi(v), pp = lnphi(v + hd), pm = lnphi(v - hd);
      const double d1 = (pp - pm) / (2 * hd), d2 = (pp - 2 * p0 + pm) / (hd * hd);
      if (!(d1 < 0)) throw precondition_error("monotone", "synthesis: w^2(1/y) is not decreasing at the junction");
      r0_ = -std::exp(p0) * d1 / y0_;
      slope_ = d1 + d2 / d1 - 1;
      low_total_ = ext_integral(0, y0_);
    }
  }

  double operator()(double y) const {
    if (prof_ == Profile::sharp_tail) return y >= L_ ? 0.0 : phi(std::max(y, ymin_));
    if (y >= y0_) return phi(y) * (1 - smooth_step((y - L_ / 2) / (L_ / 2)));
    return phi(y0_) + low_total_ - ext_integral(0, std::max(y, 0.0));
  }

 private:
  double phi(double y) const {
    const double v = w_(1 / y);
    return v * v;
  }
  double lnphi(double v) const { return std::log(phi(std::exp(v))); }
  double ext_density(double l) const {
    return r0_ * std::pow(l / y0_, slope_) * smooth_step((l - kLow) / (y0_ - kLow));
  }
  double ext_integral(double a, double b) const {
    a = std::max(a, kLow);
    if (b <= a) return 0;
    const GaussRule& r = gl16();
    constexpr int kSub = 16;
    const double h = (b - a) / kSub;
    double s = 0;
    for (int k = 0; k < kSub; ++k) {
      const double lo = a + k * h;
      for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * ext_density(lo + h * (1 + r.x[i]) / 2);
    }
    return s * h / 2;
  }

  static constexpr double kLow = 0.5;
  ModulusSpec w_;
  double L_;
  Profile prof_;
  double ymin_ = 0, y0_ = 0, r0_ = 0, slope_ = 0, low_total_ = 0;
};

}  // namespace detail

// Even spectral data g >= 0 whose discrete tail sum_{|l| >= y} lw g^2 follows
// w^2(1/y). Positive nodes are given cells [a_j, b_j] with the same measure as
// their weights; the cell receives half of Phi(a_j) - Phi(b_j), the mirror
// node the other half, so the tail telescopes exactly at cell boundaries.
inline SpectralData synthesize_from_tail(const SynthesisSpec& spec, const WeightedGrid& lgrid) {
  if (!(spec.lambda_radius > 1)) throw config_error("synthesis: lambda radius must exceed 1");
  if (lgrid.alpha != spec.alpha) throw config_error("synthesis: grid alpha differs from synthesis alpha");
  if (lgrid.radius < spec.lambda_radius) throw config_error("synthesis: grid radius below synthesis radius");
  if (!check_almost_monotone(spec.modulus, Direction::almost_decreasing, 1000).passed)
    throw precondition_error("quotient", "synthesis: w(t)/t is not almost decreasing for " + spec.modulus.name);

  const detail::TailProfile Phi(spec, spec.lambda_radius);
  const double a = spec.alpha, ca = c_alpha(a);
  const std::size_t n = lgrid.size(), half = n / 2;
  SpectralData g{a, lgrid, std::vector<double>(n, 0.0)};
  double cum = 0, left = 0, phi_left = Phi(0);
  for (std::size_t i = half; i < n; ++i) {
    const double wgt = lgrid.weights[i];
    cum += wgt;
    double right = std::pow(2 * a * cum / ca, 1 / (2 * a));
    if (i == n - 1) right = lgrid.radius;
    const double phi_right = right >= spec.lambda_radius && spec.profile == Profile::sharp_tail ? 0.0 : Phi(right);
    const double mass = (phi_left - phi_right) / 2;
    if (mass < -1e-12 * std::fabs(phi_left))
      throw precondition_error("monotone", "synthesis: tail profile increases between " + fmt_double(left) +
                                               " and " + fmt_double(right));
    const double v = std::sqrt(std::max(mass, 0.0) / wgt);
    g.values[i] = v;
    g.values[n - 1 - i] = v;
    left = right;
    phi_left = phi_right;
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace detail {

inline void require_Z0(const ModulusSpec& w) {
  const ZygmundTrace z = zygmund_Z0_trace(w);
  if (z.divergent)
    throw precondition_error("Z0", "modulus " + w.name + " fails the Z0 condition int_0^t w(x)/x dx <= C w(t): " +
                                       z.reason);
}

inline void require_Z1(const ModulusSpec& w) {
  const ZygmundTrace z = zygmund_Z1_trace(w);
  if (z.divergent)
    throw precondition_error("Z1", "modulus " + w.name +
                                       " fails the Z1 condition t int_t^delta0 w(x)/x^2 dx <= C w(t): " + z.reason);
}

inline void fill_config(VerificationReport& r, const ModulusSpec& w, const TransformPlan& plan, double p) {
  const WeightedGrid &xg = plan.xgrid(), &lg = plan.lgrid();
  r.config = {{"theorem", to_string(r.theorem_id)},
              {"alpha", fmt_double(plan.alpha())},
              {"p", fmt_double(p)},
              {"modulus", w.name},
              {"delta0", fmt_double(w.delta0)},
              {"radius_x", fmt_double(xg.radius)},
              {"radius_lambda", fmt_double(lg.radius)},
              {"panels", std::to_string(xg.panels)},
              {"order", std::to_string(xg.order)},
              {"lambda_panels", std::to_string(lg.panels)},
              {"asymptotic_switch", fmt_double(plan.kernel().params().asymptotic_switch)}};
}

inline void check_h_grid(std::span<const double> h_grid, const ModulusSpec& w) {
  if (h_grid.empty()) throw config_error("verifier: empty h grid");
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    if (!(h_grid[i] > 0 && h_grid[i] <= w.delta0)) throw config_error("verifier: h grid must lie in (0, delta0]");
    if (i > 0 && !(h_grid[i] < h_grid[i - 1])) throw config_error("verifier: h grid must decrease");
  }
}

// tail is resolved when 1/h <= radius/4
inline std::vector<bool> truncation(std::span<const double> h_grid, const WeightedGrid& lg) {
  std::vector<bool> f;
  for (double h : h_grid) f.push_back(4.0 / h > lg.radius * (1 + 1e-12));
  return f;
}

// Physical-route agreement for p = 2 (max relative difference of the traces).
inline double route_check(VerificationReport& r, const FunctionSpec& f, std::span<const double> h_grid,
                          const ModulusSpec& w, const TransformPlan& plan, const std::vector<double>& fast) {
  const std::vector<double> phys = diff_norms(f, h_grid, 2, plan, DiffRoute::physical);
  std::vector<double> pr;
  double worst = 0;
  for (std::size_t k = 0; k < phys.size(); ++k) {
    pr.push_back(phys[k] / w(h_grid[k]));
    if (fast[k] > 0) worst = std::max(worst, std::fabs(phys[k] - fast[k]) / fast[k]);
  }
  r.series.emplace_back("physical_ratios", pr);
  r.diag("route_max_rel_diff", worst);
  return worst;
}

inline double total_energy(const SpectralData& F, double q) {
  double s = 0;
  for (std::size_t j = 0; j < F.values.size(); ++j) s += F.lambda_grid.weights[j] * std::pow(std::fabs(F.values[j]), q);
  return s;
}

inline void finish(VerificationReport& r, double floor = 0) {
  r.estimated_constant = 0;
  for (double v : r.ratios) r.estimated_constant = std::max(r.estimated_constant, v);
  r.verdict = classify_ratios(r.ratios, floor, r.h_grid);
}

}  // namespace detail

// Forward direction: tail energy of F(f) beyond 1/h against w^q(h).
inline VerificationReport verify_main1_part1(const FunctionSpec& f, const ModulusSpec& w, double p,
                                             const TransformPlan& plan, std::span<const double> h_grid) {
  if (!(p > 1 && p <= 2)) throw domain_error("main1_part1: p must lie in (1, 2]");
  detail::check_h_grid(h_grid, w);
  detail::require_Z0(w);
  VerificationReport r;
  r.theorem_id = TheoremId::main1_part1;
  detail::fill_config(r, w, plan, p);
  const double q = p / (p - 1);
  r.config.emplace_back("q", fmt_double(q));
  const SpectralData F = spectrum_of(f, plan);
  r.h_grid.assign(h_grid.begin(), h_grid.end());
  r.truncation_flags = detail::truncation(h_grid, F.lambda_grid);
  std::vector<double> tails;
  for (double h : h_grid) {
    const TailEnergy t = tail_energy(F, h, q);
    tails.push_back(t.value);
    r.ratios.push_back(t.value / std::pow(w(h), q));
  }
  r.series.emplace_back("tail_energy", tails);
  // roundoff level of a tail: relative 1e-24 of the total q-energy
  const double floor = 1e-24 * detail::total_energy(F, q) / std::pow(w(h_grid.front()), q);
  detail::finish(r, floor);
  r.diag("loglog_slope", loglog_slope(r.h_grid, r.ratios));

  const Seminorm s = dlip_seminorm(f, w, p, h_grid, plan);
  r.series.emplace_back("dlip_ratios", s.ratios);
  r.diag("dlip_seminorm", s.value);
  r.diag("dlip_hypothesis", to_string(classify_ratios(s.ratios)));
  if (p == 2) detail::route_check(r, f, h_grid, w, plan, diff_norms(f, h_grid, 2, plan, DiffRoute::spectral));
  return r;
}

// Converse for p = 2: tail <= C w^2(h) implies ||T_h f - f||_2 <= C w(h).
inline VerificationReport verify_main1_part2(const SpectralData& g, const ModulusSpec& w, const TransformPlan& plan,
                                             std::span<const double> h_grid) {
  detail::check_h_grid(h_grid, w);
  detail::require_Z1(w);
  VerificationReport r;
  r.theorem_id = TheoremId::main1_part2;
  detail::fill_config(r, w, plan, 2);
  r.h_grid.assign(h_grid.begin(), h_grid.end());
  r.truncation_flags = detail::truncation(h_grid, g.lambda_grid);
  std::vector<double> tail_ratios;
  for (double h : h_grid) tail_ratios.push_back(tail_energy(g, h, 2).value / std::pow(w(h), 2));
  const Verdict tv = classify_ratios(tail_ratios);
  if (tv != Verdict::bounded)
    throw precondition_error("tail", "spectral tail is not O(w^2(h)) on the h grid (" + to_string(tv) + ")");
  r.series.emplace_back("tail_ratios", tail_ratios);

  const FunctionSpec f = inverse(g, plan);
  const std::vector<double> fast = diff_norms(f, h_grid, 2, plan, DiffRoute::spectral);
  for (std::size_t k = 0; k < fast.size(); ++k) r.ratios.push_back(fast[k] / w(h_grid[k]));
  detail::finish(r);
  detail::route_check(r, f, h_grid, w, plan, fast);
  r.diag("assumed", "w bounded below on [delta0, inf) and w^2(t)/t^3 integrable there (vacuous on truncated grids)");
  return r;
}

// Both statements of the equivalence evaluated on the same data.
inline VerificationReport verify_equivalence(const SpectralData& g, const ModulusSpec& w, const TransformPlan& plan,
                                             std::span<const double> h_grid) {
  detail::check_h_grid(h_grid, w);
  detail::require_Z0(w);
  detail::require_Z1(w);
  VerificationReport r;
  r.theorem_id = TheoremId::equivalence;
  detail::fill_config(r, w, plan, 2);
  r.h_grid.assign(h_grid.begin(), h_grid.end());
  r.truncation_flags = detail::truncation(h_grid, g.lambda_grid);
  const FunctionSpec f = inverse(g, plan);

  std::vector<double> tail_ratios;
  for (double h : h_grid) tail_ratios.push_back(tail_energy(g, h, 2).value / std::pow(w(h), 2));
  const std::vector<double> fast = diff_norms(f, h_grid, 2, plan, DiffRoute::spectral);
  for (std::size_t k = 0; k < fast.size(); ++k) r.ratios.push_back(fast[k] / w(h_grid[k]));
  r.series.emplace_back("tail_ratios", tail_ratios);
  detail::finish(r);
  const Verdict v_lip = r.verdict, v_tail = classify_ratios(tail_ratios);
  r.diag("dlip_verdict", to_string(v_lip));
  r.diag("tail_verdict", to_string(v_tail));
  r.diag("statements_agree", v_lip == v_tail ? "true" : "false");
  if (v_lip == Verdict::bounded && v_tail == Verdict::bounded) r.verdict = Verdict::bounded;
  else if (v_lip == Verdict::unbounded || v_tail == Verdict::unbounded) r.verdict = Verdict::unbounded;
  else r.verdict = Verdict::inconclusive;
  for (double v : tail_ratios) r.estimated_constant = std::max(r.estimated_constant, v);
  detail::route_check(r, f, h_grid, w, plan, fast);
  return r;
}

struct TwoConditions {
  bool integrable = false;  // w^nu(t) / t^{e+1} in L^1 near 0
  bool limit_finite = false;  // w^nu(h) / h^e bounded as h -> 0
  double exponent = 0;        // e = 2 alpha (1 - nu/q)
  bool holds() const { return integrable && limit_finite; }
};

inline TwoConditions check_two_conditions(const ModulusSpec& w, double alpha, double p, double nu) {
  const double q = p / (p - 1);
  TwoConditions c;
  c.exponent = 2 * alpha * (1 - nu / q);
  auto fn = w.evaluator;
  const double e = c.exponent;
  // evaluated in logs: t^{-(e+1)} alone overflows deep in the grid
  try {
    const LogIntegral I = integral_from_zero(
        [fn, nu, e](double t) { return std::exp(nu * std::log(fn(t)) - (e + 1) * std::log(t)); }, w.delta0);
    c.integrable = I.model.converged;
  } catch (const evaluation_error&) {
    c.integrable = false;
  }
  ZygmundTrace z;
  for (int j = 0; j <= detail::zygmund_points(w.delta0); ++j) {
    const double h = detail::quarter_point(w.delta0, j);
    z.t.push_back(h);
    z.ratio.push_back(std::exp(nu * std::log(w(h)) - e * std::log(h)));
  }
  detail::finish_trace(z);
  c.limit_finite = !z.divergent;
  return c;
}

// L_nu membership of F(f): partial nu-norms over nested frequency radii
// R = radius/4, radius/8, ...; bounded when the last doubling adds < 5%.
inline VerificationReport verify_fourier_Lnu(const FunctionSpec& f, const ModulusSpec& w, double p, double nu,
                                             const TransformPlan& plan, int doublings = 8) {
  if (!(p > 1 && p <= 2)) throw domain_error("fourier_Lnu: p must lie in (1, 2]");
  const double q = p / (p - 1);
  if (nu > q) throw domain_error("fourier_Lnu: nu must not exceed q = p/(p-1)");
  if (!(nu >= 1)) throw domain_error("fourier_Lnu: nu must be at least 1");
  detail::require_Z0(w);
  VerificationReport r;
  r.theorem_id = TheoremId::fourier_Lnu;
  detail::fill_config(r, w, plan, p);
  r.config.emplace_back("nu", fmt_double(nu));
  const TwoConditions tc = check_two_conditions(w, plan.alpha(), p, nu);
  r.diag("integrability_condition", tc.integrable ? "holds" : "fails");
  r.diag("limit_condition", tc.limit_finite ? "holds" : "fails");
  r.diag("exponent", tc.exponent);
  if (!tc.holds()) {
    r.verdict = Verdict::hypothesis_failed;
    return r;
  }
  const SpectralData F = spectrum_of(f, plan);
  const double top = F.lambda_grid.radius / 4;
  std::vector<double> radii, norms;
  for (int k = doublings; k >= 0; --k) radii.push_back(std::ldexp(top, -k));
  for (double R : radii) {
    double s = 0;
    for (std::size_t j = 0; j < F.values.size(); ++j)
      if (std::fabs(F.lambda_grid.nodes[j]) <= R) s += F.lambda_grid.weights[j] * std::pow(std::fabs(F.values[j]), nu);
    norms.push_back(std::pow(s, 1 / nu));
  }
  for (std::size_t k = 1; k < radii.size(); ++k) {
    r.h_grid.push_back(1 / radii[k]);
    r.ratios.push_back(norms[k] / norms[k - 1]);
    r.truncation_flags.push_back(false);
  }
  r.series.emplace_back("partial_norm", std::vector<double>(norms.begin() + 1, norms.end()));
  r.estimated_constant = norms.back();
  const std::size_t n = r.ratios.size();
  if (r.ratios[n - 1] < 1.05) r.verdict = Verdict::bounded;
  else if (n >= 2 && r.ratios[n - 1] >= r.ratios[n - 2]) r.verdict = Verdict::unbounded;
  else r.verdict = Verdict::inconclusive;
  return r;
}

enum class Main2Mode { part1, part2 };

// The two main directions with W(t) = int_0^t w(s)/s ds in place of w.
inline VerificationReport verify_main2(const FunctionSpec& f, const ModulusSpec& w, Main2Mode mode, double p,
                                       const TransformPlan& plan, std::span<const double> h_grid) {
  ModulusSpec W;
  try {
    W = build_W_omega(w);
  } catch (const config_error& e) {
    throw precondition_error("W_omega", e.what());
  }
  VerificationReport r = mode == Main2Mode::part1 ? verify_main1_part1(f, W, p, plan, h_grid)
                                                   : verify_main1_part2(spectrum_of(f, plan), W, plan, h_grid);
  r.theorem_id = mode == Main2Mode::part1 ? TheoremId::main2_part1 : TheoremId::main2_part2;
  r.config[0].second = to_string(r.theorem_id);
  r.config.emplace_back("base_modulus", w.name);
  if (mode == Main2Mode::part1)
    r.diag("regime", plan.alpha() > 0.5 ? "alpha > 1/2" : "1/4 < alpha <= 1/2 (outside the stated alpha > 1/2)");
  return r;
}

// DLip(w, p) inside DLip(W, p): the trace against W next to the trace
// against w. estimated_constant is the W-seminorm; the diagnostic
// seminorm_ratio is W-seminorm / w-seminorm.
inline VerificationReport verify_inclusion(const FunctionSpec& f, const ModulusSpec& w, double p,
                                           const TransformPlan& plan, std::span<const double> h_grid) {
  detail::check_h_grid(h_grid, w);
  ModulusSpec W;
  try {
    W = build_W_omega(w);
  } catch (const config_error& e) {
    throw precondition_error("W_omega", e.what());
  }
  VerificationReport r;
  r.theorem_id = TheoremId::inclusion_Womega;
  detail::fill_config(r, w, plan, p);
  r.h_grid.assign(h_grid.begin(), h_grid.end());
  r.truncation_flags = detail::truncation(h_grid, plan.lgrid());
  const Seminorm sw = dlip_seminorm(f, w, p, h_grid, plan);
  const Seminorm sW = dlip_seminorm(f, W, p, h_grid, plan);
  r.ratios = sW.ratios;
  r.series.emplace_back("omega_ratios", sw.ratios);
  detail::finish(r);
  r.diag("omega_verdict", to_string(classify_ratios(sw.ratios)));
  r.diag("seminorm_omega", sw.value);
  r.diag("seminorm_W", sW.value);
  r.diag("seminorm_ratio", sw.value > 0 ? sW.value / sw.value : 0.0);
  return r;
}

}  // namespace hlip
