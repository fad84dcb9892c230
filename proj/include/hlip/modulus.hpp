#pragma once

// Moduli of continuity: built-in families, almost-monotonicity, the two
// Zygmund integral conditions, Matuszewska-Orlicz indices and the cumulative
// weight W(t) = int_0^t w(s)/s ds.
//
// Everything near 0 is done in the variable u = ln t, on quarter-decade
// Gauss-Legendre panels reaching up to 280 decades below delta0. Convergence
// of an improper integral at 0 is decided from the per-decade increments
// D_k by fitting ln D_k = a + b k + c ln k on the deepest half of the range:
// b < 0 is geometric decay, b ~ 0 with c < -1 a summable power law.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "format.hpp"
#include "quadrature.hpp"

namespace hlip {

enum class Family { power, power_log, power_loglog, log_inverse, power_logexponent, cumulative, custom };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::power: return "power";
    case Family::power_log: return "power_log";
    case Family::power_loglog: return "power_loglog";
    case Family::log_inverse: return "log_inverse";
    case Family::power_logexponent: return "power_logexponent";
    case Family::cumulative: return "cumulative";
    default: return "custom";
  }
}

struct ModulusSpec {
  std::function<double(double)> evaluator;
  double delta0 = 0.5;
  Family family_tag = Family::custom;
  std::vector<double> params;
  std::string name;

  double operator()(double t) const { return evaluator(t); }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline ModulusSpec make_custom(std::function<double(double)> fn, double delta0, std::string name = "custom") {
  if (!(delta0 > 0)) throw config_error("modulus: delta0 must be positive");
  return ModulusSpec{std::move(fn), delta0, Family::custom, {}, std::move(name)};
}

// Log families are cut to the range where their logarithms are >= 1 and the
// formula is a genuine modulus; delta0 is shrunk accordingly.
inline ModulusSpec make_family(Family tag, const std::vector<double>& p, double delta0 = 0.5) {
  if (!(delta0 > 0)) throw config_error("modulus: delta0 must be positive");
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw config_error("modulus: family " + to_string(tag) + " takes " + std::to_string(n) + " parameters");
  };
  auto gamma_ok = [](double g, bool allow_one) {
    if (!(g > 0 && (allow_one ? g <= 1 : g < 1))) throw config_error("modulus: gamma out of range");
  };
  ModulusSpec w;
  w.family_tag = tag;
  w.params = p;
  std::ostringstream nm;
  nm << to_string(tag) << ":";
  switch (tag) {
    case Family::power: {
      need(1);
      gamma_ok(p[0], true);
      const double g = p[0];
      w.delta0 = delta0;
      w.evaluator = [g](double t) { return t == 0 ? 0.0 : std::pow(std::fabs(t), g); };
      nm << "gamma=" << fmt_double(g);
      break;
    }
    case Family::power_log: {
      need(2);
      gamma_ok(p[0], false);
      const double g = p[0], th = p[1];
      w.delta0 = std::min(delta0, std::exp(-1.0));
      w.evaluator = [g, th](double t) {
        t = std::fabs(t);
        return t == 0 ? 0.0 : std::pow(t, g) * std::pow(std::log(1 / t), th);
      };
      nm << "gamma=" << fmt_double(g) << ",theta=" << fmt_double(th);
      break;
    }
    case Family::power_loglog: {
      need(2);
      gamma_ok(p[0], false);
      const double g = p[0], la = p[1];
      w.delta0 = std::min(delta0, std::exp(-std::numbers::e));
      w.evaluator = [g, la](double t) {
        t = std::fabs(t);
        return t == 0 ? 0.0 : std::pow(t, g) * std::pow(std::log(std::log(1 / t)), la);
      };
      nm << "gamma=" << fmt_double(g) << ",lambda=" << fmt_double(la);
      break;
    }
    case Family::log_inverse: {
      need(1);
      if (!(p[0] > 1)) throw config_error("modulus: log_inverse needs beta > 1");
      const double b = p[0];
      if (!(delta0 < std::numbers::e)) throw config_error("modulus: log_inverse needs delta0 < e");
      w.delta0 = delta0;
      w.evaluator = [b](double t) {
        t = std::fabs(t);
        return t == 0 ? 0.0 : std::pow(std::log(std::numbers::e / t), -b);
      };
      nm << "beta=" << fmt_double(b);
      break;
    }
    case Family::power_logexponent: {
      need(3);
      gamma_ok(p[0], false);
      if (!(p[2] > 0)) throw config_error("modulus: power_logexponent needs lambda > 0");
      const double g = p[0], C = p[1], la = p[2];
      w.delta0 = std::min(delta0, std::exp(-1.0));
      w.evaluator = [g, C, la](double t) {
        t = std::fabs(t);
        if (t == 0) return 0.0;
        const double L = std::log(1 / t);
        return std::exp(-L * (g + C / std::pow(L, la)));
      };
      nm << "gamma=" << fmt_double(g) << ",C=" << fmt_double(C) << ",lambda=" << fmt_double(la);
      break;
    }
    default:
      throw config_error("modulus: family " + to_string(tag) + " cannot be built from parameters");
  }
  w.name = nm.str();
  return w;
}

inline std::string modulus_grammar() {
  return "family:key=value[,key=value...] with\n"
         "  power:gamma=G                      (0 < G <= 1)\n"
         "  power_log:gamma=G,theta=T          (0 < G < 1)\n"
         "  log_inverse:beta=B                 (B > 1)\n"
         "  power_logexponent:gamma=G,C=C,lambda=L  (0 < G < 1, L > 0)\n"
         "  power_loglog:gamma=G,lambda=L      (0 < G < 1)\n"
         "  any family also accepts delta0=D";
}

inline ModulusSpec parse_modulus(const std::string& s, double delta0 = 0.5) {
  auto fail = [&](const std::string& why) -> ModulusSpec {
    throw config_error("cannot parse modulus '" + s + "': " + why + "\nexpected " + modulus_grammar());
  };
  const auto colon = s.find(':');
  if (colon == std::string::npos) return fail("missing ':'");
  const std::string fam = s.substr(0, colon);
  std::map<std::string, double> kv;
  std::stringstream ss(s.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) return fail("bad item '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      return fail("bad number '" + val + "'");
    }
    if (used != val.size()) return fail("bad number '" + val + "'");
    if (kv.count(key)) return fail("duplicate key '" + key + "'");
    kv[key] = v;
  }
  if (kv.count("delta0")) {
    delta0 = kv["delta0"];
    kv.erase("delta0");
  }
  struct Entry {
    Family tag;
    std::vector<std::string> keys;
  };
  static const std::map<std::string, Entry> table = {
      {"power", {Family::power, {"gamma"}}},
      {"power_log", {Family::power_log, {"gamma", "theta"}}},
      {"log_inverse", {Family::log_inverse, {"beta"}}},
      {"power_logexponent", {Family::power_logexponent, {"gamma", "C", "lambda"}}},
      {"power_loglog", {Family::power_loglog, {"gamma", "lambda"}}},
  };
  const auto it = table.find(fam);
  if (it == table.end()) return fail("unknown family '" + fam + "'");
  std::vector<double> params;
  for (const auto& k : it->second.keys) {
    const auto f = kv.find(k);
    if (f == kv.end()) return fail("missing key '" + k + "'");
    params.push_back(f->second);
    kv.erase(f);
  }
  if (!kv.empty()) return fail("unknown key '" + kv.begin()->first + "'");
  try {
    return make_family(it->second.tag, params, delta0);
  } catch (const config_error& e) {
    return fail(e.what());
  }
}

// ---------------------------------------------------------------------------
// Almost monotonicity

enum class Direction { almost_increasing, almost_decreasing };

struct MonotonicityCertificate {
  Direction direction = Direction::almost_increasing;
  double constant = 1;
  int sample_size = 0;
  bool passed = false;
};

namespace detail {

// Log-spaced samples on (0, delta0]; the depth grows with the sample count
// (10 per decade, at most 280 decades) so refinement also probes smaller t.
inline std::vector<double> log_samples(double delta0, int n) {
  const double decades = std::min(n / 10.0, 280.0);
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = delta0 * std::pow(10.0, -decades * (1.0 - static_cast<double>(i) / (n - 1)));
  t[n - 1] = delta0;
  return t;
}

inline double monotone_constant(const std::function<double(double)>& fn, double delta0, Direction dir, int n) {
  const std::vector<double> t = log_samples(delta0, n);
  double c = 1, run = 0;
  for (int i = 0; i < n; ++i) {
    const double v = fn(t[i]);
    if (!std::isfinite(v) || !(v > 0)) throw evaluation_error("almost-monotone check: non-finite or non-positive value");
    if (i == 0) {
      run = v;
      continue;
    }
    // t_k <= t_i: increasing needs f(t_k) <= C f(t_i); decreasing needs f(t_i) <= C f(t_k)
    if (dir == Direction::almost_increasing) {
      c = std::max(c, run / v);
      run = std::max(run, v);
    } else {
      c = std::max(c, v / run);
      run = std::min(run, v);
    }
  }
  return c;
}

}  // namespace detail

inline MonotonicityCertificate check_almost_monotone(const std::function<double(double)>& fn, double delta0,
                                                     Direction dir, int samples) {
  if (samples < 100) throw config_error("almost-monotone check: need at least 100 samples");
  MonotonicityCertificate cert;
  cert.direction = dir;
  cert.sample_size = samples;
  cert.constant = detail::monotone_constant(fn, delta0, dir, samples);
  const double refined = detail::monotone_constant(fn, delta0, dir, 2 * samples);
  cert.passed = std::isfinite(refined) && refined <= 1.05 * cert.constant;
  return cert;
}

// almost_increasing checks w itself, almost_decreasing checks w(t)/t.
inline MonotonicityCertificate check_almost_monotone(const ModulusSpec& w, Direction dir, int samples) {
  if (dir == Direction::almost_increasing) return check_almost_monotone(w.evaluator, w.delta0, dir, samples);
  auto fn = w.evaluator;
  return check_almost_monotone([fn](double t) { return fn(t) / t; }, w.delta0, dir, samples);
}

// ---------------------------------------------------------------------------
// Integrals in the logarithmic variable

namespace detail {

inline const GaussRule& gl16() {
  static const GaussRule r = gauss_legendre(16);
  return r;
}

// int_a^b f(x) dx with x = e^u, one 16-point panel.
inline double log_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& r = gl16();
  const double ua = std::log(a), ub = std::log(b), half = (ub - ua) / 2, mid = (ua + ub) / 2;
  double s = 0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const double x = std::exp(mid + half * r.x[i]);
    const double v = f(x);
    if (!std::isfinite(v)) throw evaluation_error("log quadrature: integrand not finite at t=" + fmt_double(x));
    s += r.w[i] * v * x;
  }
  return s * half;
}

constexpr int kPerDecade = 4;
constexpr double kMaxDepth = 280;
constexpr double kFloor = 1e-300;

inline double quarter_point(double top, int k) { return top * std::pow(10.0, -static_cast<double>(k) / kPerDecade); }

// Quarter-decade increments q_k = int over [top 10^{-(k+1)/4}, top 10^{-k/4}].
inline std::vector<double> quarter_increments(const std::function<double(double)>& f, double top, double decades) {
  const int n = static_cast<int>(decades * kPerDecade);
  std::vector<double> q(n);
  for (int k = 0; k < n; ++k) q[k] = log_panel(f, quarter_point(top, k + 1), quarter_point(top, k));
  return q;
}

inline double available_depth(double top) { return std::min(kMaxDepth, std::floor(std::log10(top / kFloor))); }

}  // namespace detail

struct TailModel {
  bool converged = false;
  double tail = 0;            // estimated integral beyond the deepest decade
  double rate = 0;            // b: log decay per decade
  double power = 0;           // c: power-law exponent in the decade index
};

// Decide summability of per-decade increments d[0..K-1] (d[k] is decade k+1
// counted from the top) and estimate the remainder beyond the last one.
inline TailModel classify_increments(const std::vector<double>& d) {
  constexpr double kRateTol = 2.3e-4;  // exponent 1e-4 per decade
  constexpr double kPowerTol = -1.1;
  TailModel m;
  const int K = static_cast<int>(d.size());
  if (K < 8) throw config_error("convergence classifier: need at least 8 decades");
  const int lo = K / 2;
  std::vector<int> idx;
  for (int k = lo; k < K; ++k)
    if (d[k] > 0 && std::isfinite(d[k])) idx.push_back(k);
  if (idx.empty()) {
    bool all_zero = true;
    for (int k = lo; k < K; ++k) all_zero = all_zero && d[k] == 0;
    m.converged = all_zero;
    m.tail = all_zero ? 0 : kInf;
    return m;
  }
  if (idx.size() < 4) {
    // increments underflowed: decay is faster than anything representable
    m.converged = true;
    m.rate = -kInf;
    return m;
  }
  const int n = static_cast<int>(idx.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd y(n);
  const double kc = (lo + K) / 2.0, ks = K - lo;
  for (int i = 0; i < n; ++i) {
    const double k = idx[i] + 1.0;
    A(i, 0) = 1;
    A(i, 1) = (k - kc) / ks;
    A(i, 2) = std::log(k / kc);
    y(i) = std::log(d[idx[i]]);
  }
  const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(y);
  const double b = sol(1) / ks, c = sol(2), a = sol(0) - b * kc - c * std::log(kc);
  m.rate = b;
  m.power = c;
  auto term = [&](double k) { return std::exp(a + b * k + c * std::log(k)); };
  if (b < -kRateTol) {
    m.converged = true;
    double s = 0;
    for (int k = K + 1; k < K + 20000000; ++k) {
      const double t = term(k);
      s += t;
      if (t < 1e-17 * s || t == 0) break;
    }
    m.tail = s;
  } else if (b <= kRateTol && c < kPowerTol) {
    m.converged = true;
    m.tail = std::exp(a) * std::pow(K + 0.5, c + 1) / (-c - 1);
  } else {
    m.converged = false;
    m.tail = kInf;
  }
  return m;
}

// Convergence of int_0^top f(x) dx plus quarter-decade increments and tail.
struct LogIntegral {
  double top = 0;
  std::vector<double> quarter;  // quarter-decade increments from the top
  TailModel model;

  // int_0^{top 10^{-k/4}} f
  double below(int k) const {
    double s = model.tail;
    for (int i = static_cast<int>(quarter.size()) - 1; i >= k; --i) s += quarter[i];
    return s;
  }
};

inline LogIntegral integral_from_zero(const std::function<double(double)>& f, double top) {
  LogIntegral r;
  r.top = top;
  const double depth = detail::available_depth(top);
  r.quarter = detail::quarter_increments(f, top, depth);
  std::vector<double> dec(r.quarter.size() / detail::kPerDecade);
  for (std::size_t k = 0; k < dec.size(); ++k)
    for (int j = 0; j < detail::kPerDecade; ++j) dec[k] += r.quarter[k * detail::kPerDecade + j];
  r.model = classify_increments(dec);
  return r;
}

// ---------------------------------------------------------------------------
// Zygmund conditions

struct ZygmundTrace {
  std::vector<double> t, ratio;
  bool divergent = false;
  double constant = kInf;
  std::string reason;
};

namespace detail {

constexpr double kZygmundTmin = 1e-8;

// Divergence sentinel: the running sup grew by more than 10% on each of the
// last three decade extensions of the t-grid.
inline void finish_trace(ZygmundTrace& z) {
  const int n = static_cast<int>(z.ratio.size());
  std::vector<double> sup_at_decade;
  double run = 0;
  for (int i = 0; i < n; ++i) {
    run = std::max(run, z.ratio[i]);
    if (i % kPerDecade == 0) sup_at_decade.push_back(run);
  }
  z.constant = run;
  const int d = static_cast<int>(sup_at_decade.size());
  bool grows = d >= 4;
  for (int i = d - 3; grows && i < d; ++i) grows = sup_at_decade[i] > 1.1 * sup_at_decade[i - 1];
  if (grows) {
    z.divergent = true;
    z.reason = "sup grows by more than 10% per decade as t -> 0";
  }
}

inline int zygmund_points(double delta0) {
  return static_cast<int>(std::floor(kPerDecade * std::log10(delta0 / kZygmundTmin) + 1e-9));
}

}  // namespace detail

// sup_t (int_0^t w(x)/x dx) / w(t)
inline ZygmundTrace zygmund_Z0_trace(const ModulusSpec& w) {
  ZygmundTrace z;
  auto fn = w.evaluator;
  const LogIntegral I = integral_from_zero([fn](double x) { return fn(x) / x; }, w.delta0);
  const int J = detail::zygmund_points(w.delta0);
  for (int j = 0; j <= J; ++j) z.t.push_back(detail::quarter_point(w.delta0, j));
  if (!I.model.converged) {
    z.divergent = true;
    z.reason = "int_0^t w(x)/x dx diverges";
    return z;
  }
  for (int j = 0; j <= J; ++j) z.ratio.push_back(I.below(j) / w(z.t[j]));
  detail::finish_trace(z);
  return z;
}

// sup_t t (int_t^delta0 w(x)/x^2 dx) / w(t)
inline ZygmundTrace zygmund_Z1_trace(const ModulusSpec& w) {
  ZygmundTrace z;
  auto fn = w.evaluator;
  std::function<double(double)> f = [fn](double x) { return fn(x) / (x * x); };
  const int J = detail::zygmund_points(w.delta0);
  double acc = 0;
  z.t.push_back(w.delta0);
  z.ratio.push_back(0);
  for (int j = 1; j <= J; ++j) {
    const double hi = detail::quarter_point(w.delta0, j - 1), t = detail::quarter_point(w.delta0, j);
    acc += detail::log_panel(f, t, hi);
    z.t.push_back(t);
    z.ratio.push_back(t * acc / w(t));
  }
  detail::finish_trace(z);
  return z;
}

inline double zygmund_Z0_constant(const ModulusSpec& w) {
  const ZygmundTrace z = zygmund_Z0_trace(w);
  return z.divergent ? kInf : z.constant;
}

inline double zygmund_Z1_constant(const ModulusSpec& w) {
  const ZygmundTrace z = zygmund_Z1_trace(w);
  return z.divergent ? kInf : z.constant;
}

// ---------------------------------------------------------------------------
// Matuszewska-Orlicz indices

struct IndexEstimate {
  double m_lower = 0;
  double M_upper = 0;
  std::vector<double> epsilon_grid;
  std::vector<double> t_grid;
  bool converged = false;
  bool underflow = false;
};

namespace detail {

// max over eps in the deepest decade [10^-E, 10^{-E+1}] of w(eps t)/w(eps),
// with eps <= cap.
inline double limsup_ratio(const ModulusSpec& w, double t, int E, double cap, bool& underflow) {
  double best = 0;
  for (int i = 0; i <= 10; ++i) {
    const double eps = std::min(cap, std::pow(10.0, -E + i / 10.0));
    const double a = w(eps * t), b = w(eps);
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
      underflow = true;
      continue;
    }
    best = std::max(best, a / b);
  }
  return best;
}

}  // namespace detail

// The limsup over eps -> 0 is taken as the max over the deepest decade of a
// geometric eps-grid (10 per decade) reaching 1e-280 where the evaluator
// allows: log-type factors bias a shallow grid by theta/ln(1/eps).
inline IndexEstimate estimate_indices(const ModulusSpec& w) {
  IndexEstimate r;
  const double t_small = 1e-6, t_large = 1e6;
  for (int k = 1; k <= 6; ++k) r.t_grid.push_back(std::pow(10.0, -k));
  for (int k = 1; k <= 6; ++k) r.t_grid.push_back(std::pow(10.0, k));
  int E = static_cast<int>(std::min(280.0, std::floor(294 + std::log10(w.delta0))));
  // false when the evaluator under/overflowed somewhere in the deepest decade
  auto estimate = [&](int depth, double& m, double& M) {
    bool under = false;
    const double lm = detail::limsup_ratio(w, t_small, depth, 1e-3, under);
    const double lM = detail::limsup_ratio(w, t_large, depth, std::min(1e-3, w.delta0 / t_large), under);
    m = std::log(lm) / std::log(t_small);
    M = std::log(lM) / std::log(t_large);
    return !under && std::isfinite(m) && std::isfinite(M);
  };
  double m = 0, M = 0;
  while (!estimate(E, m, M)) {
    r.underflow = true;
    E -= 10;
    if (E < 12) throw evaluation_error("estimate_indices: evaluator underflows for every eps range");
  }
  double m1 = 0, M1 = 0;
  estimate(E - 1, m1, M1);
  r.m_lower = m;
  r.M_upper = M;
  r.converged = std::fabs(m - m1) < 0.01 && std::fabs(M - M1) < 0.01;
  for (int k = 30; k <= 10 * E; ++k) r.epsilon_grid.push_back(std::pow(10.0, -k / 10.0));
  return r;
}

// ---------------------------------------------------------------------------
// Cubic Hermite interpolation with given slopes, linear extrapolation

class CubicHermite {
 public:
  CubicHermite() = default;
  CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> d)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    if (x_.size() < 2 || y_.size() != x_.size() || d_.size() != x_.size())
      throw config_error("cubic interpolation: need at least two points with values and slopes");
  }

  double operator()(double x) const {
    const std::size_t n = x_.size();
    if (x <= x_[0]) return y_[0] + d_[0] * (x - x_[0]);
    if (x >= x_[n - 1]) return y_[n - 1] + d_[n - 1] * (x - x_[n - 1]);
    const std::size_t i = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1;
    const double h = x_[i + 1] - x_[i], t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * d_[i] + (-2 * t3 + 3 * t2) * y_[i + 1] +
           (t3 - t2) * h * d_[i + 1];
  }

 private:
  std::vector<double> x_, y_, d_;
};

// ---------------------------------------------------------------------------
// W(t) = int_0^t w(s)/s ds

inline ModulusSpec build_W_omega(const ModulusSpec& w) {
  constexpr int kTable = 400;
  constexpr double kTableDecades = 60;
  auto fn = w.evaluator;
  std::function<double(double)> f = [fn](double x) { return fn(x) / x; };
  const LogIntegral I = integral_from_zero(f, w.delta0);
  if (!I.model.converged)
    throw config_error("build_W_omega: int_0^t w(s)/s ds diverges for " + w.name);
  const int k_lo = static_cast<int>(kTableDecades) * detail::kPerDecade;
  std::vector<double> lx(kTable), ly(kTable), ld(kTable);
  double acc = I.below(k_lo);
  const double lo = std::log(detail::quarter_point(w.delta0, k_lo)), hi = std::log(w.delta0);
  double prev = std::exp(lo);
  for (int i = 0; i < kTable; ++i) {
    const double u = lo + (hi - lo) * i / (kTable - 1);
    const double t = i == kTable - 1 ? w.delta0 : std::exp(u);
    if (i > 0) acc += detail::log_panel(f, prev, t);
    prev = t;
    if (!(acc > 0)) throw config_error("build_W_omega: cumulative integral is not positive");
    lx[i] = u;
    ly[i] = std::log(acc);
    ld[i] = fn(t) / acc;  // d ln W / d ln t
  }
  auto interp = std::make_shared<const CubicHermite>(lx, ly, ld);
  ModulusSpec W;
  W.delta0 = w.delta0;
  W.family_tag = Family::cumulative;
  W.params = w.params;
  W.name = "W[" + w.name + "]";
  W.evaluator = [interp](double t) {
    t = std::fabs(t);
    return t == 0 ? 0.0 : std::exp((*interp)(std::log(t)));
  };
  return W;
}

// ---------------------------------------------------------------------------
// Sampled structural constants

// max w(t+s)/(w(t)+w(s)) over log-spaced pairs with t+s <= delta0
inline double semi_additivity_constant(const ModulusSpec& w, int n = 200) {
  const std::vector<double> t = detail::log_samples(w.delta0 / 2, n);
  double c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) c = std::max(c, w(t[i] + t[j]) / (w(t[i]) + w(t[j])));
  return c;
}

// max w(2t)/w(t) for 2t <= delta0
inline double doubling_constant(const ModulusSpec& w, int n = 1000) {
  const std::vector<double> t = detail::log_samples(w.delta0 / 2, n);
  double c = 0;
  for (double x : t) c = std::max(c, w(2 * x) / w(x));
  return c;
}

// max over h in {delta0 2^-j} of sum_{k=0}^{K} w^q(h/2^k) / w^q(h)
inline double dyadic_sum_constant(const ModulusSpec& w, double q, int K, int hs = 10) {
  double c = 0;
  for (int j = 0; j < hs; ++j) {
    const double h = w.delta0 * std::ldexp(1.0, -j);
    const double base = std::pow(w(h), q);
    double s = 0;
    for (int k = 0; k <= K; ++k) s += std::pow(w(std::ldexp(h, -k)), q);
    c = std::max(c, s / base);
  }
  return c;
}

struct ModulusChecks {
  bool positive = false;
  bool vanishes_at_zero = false;
  MonotonicityCertificate increasing, quotient_decreasing;
  bool all() const { return positive && vanishes_at_zero && increasing.passed && quotient_decreasing.passed; }
};

// Positivity, w -> 0 at 0 along decades, w almost increasing, w(t)/t almost
// decreasing.
inline ModulusChecks check_modulus(const ModulusSpec& w, int samples = 1000) {
  ModulusChecks r;
  r.positive = true;
  double first = 0, last = 0, prev = kInf;
  bool decreasing = true;
  for (int d = 0; d <= 280; d += 10) {
    const double v = w(w.delta0 * std::pow(10.0, -d));
    if (!(v > 0) || !std::isfinite(v)) r.positive = false;
    if (d == 0) first = v;
    last = v;
    decreasing = decreasing && v < prev;
    prev = v;
  }
  r.vanishes_at_zero = r.positive && decreasing && last < 1e-2 * first;
  r.increasing = check_almost_monotone(w, Direction::almost_increasing, samples);
  r.quotient_decreasing = check_almost_monotone(w, Direction::almost_decreasing, samples);
  return r;
}

}  // namespace hlip
