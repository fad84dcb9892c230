#pragma once

// Gamma function, normalized Bessel function j_nu and the deformed Hankel
// kernel B_alpha(u) = j_{2a-1}(2|u|^{1/2}) - u/(2a(2a+1)) j_{2a+1}(2|u|^{1/2}).

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace hlip {

struct KernelParams {
  double alpha = 0.5;
  double series_tol = 1e-15;
  // Above this |argument| the Hankel expansion is used. 20 rather than 30:
  // at z = 30 the alternating series loses ~1e-8 even in 80-bit accumulation.
  double asymptotic_switch = 20.0;

  void validate() const {
    if (!(alpha > 0.25)) throw config_error("kernel: alpha must exceed 1/4, got " + std::to_string(alpha));
    if (!(series_tol > 0)) throw config_error("kernel: series_tol must be positive");
    if (!(asymptotic_switch > 0)) throw config_error("kernel: asymptotic_switch must be positive");
  }
};

inline double gamma(double x) {
  if (!(x > 0)) throw domain_error("gamma: argument must be positive");
  return std::tgamma(x);
}

// c_alpha = 1/(2 Gamma(2 alpha)), the measure normalization.
inline double c_alpha(double alpha) { return 0.5 / gamma(2.0 * alpha); }

namespace detail {

constexpr int kSeriesCap = 500;

// sum_k (-1)^k Gamma(nu+1)/(k! Gamma(k+nu+1)) (x/2)^{2k}, accumulated in T.
template <class T>
T bessel_series(double nu, double x, double tol, int cap = kSeriesCap) {
  const T q = -(T(x) * T(x)) / T(4);
  const T vn = T(nu);
  T term = 1, sum = 1;
  for (int k = 1; k <= cap; ++k) {
    term *= q / (T(k) * (T(k) + vn));
    if (std::fabs(static_cast<long double>(term)) < tol) break;
    sum += term;
  }
  return sum;
}

// Hankel large-argument factors: J_nu(z) ~ sqrt(2/(pi z)) (P cos chi - Q sin chi).
struct HankelPQ {
  double p = 1, q = 0;
  bool converged = false;
};

inline HankelPQ hankel_pq(double nu, double z) {
  HankelPQ r;
  const double mu = 4.0 * nu * nu;
  double a = 1, best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= (mu - odd * odd) / (8.0 * k * z);
    const double mag = std::fabs(a);
    if (mag > best) break;  // asymptotic series started to diverge
    best = mag;
    switch (k % 4) {
      case 1: r.q += a; break;
      case 2: r.p -= a; break;
      case 3: r.q -= a; break;
      default: r.p += a; break;
    }
    if (mag < 1e-17) {
      r.converged = true;
      break;
    }
  }
  if (!r.converged && best < 1e-14) r.converged = true;
  return r;
}

// log of Gamma(nu+1) (2/z)^nu sqrt(2/(pi z)): converts J_nu asymptotics to j_nu.
inline double log_amplitude(double lg, double nu, double z) {
  return lg + nu * std::log(2.0 / z) + 0.5 * std::log(2.0 / (std::numbers::pi * z));
}

// Large-|z| value with a fallback for orders too high for the expansion.
inline double bessel_large(double nu, double z, double lg, double tol) {
  const HankelPQ pq = hankel_pq(nu, z);
  if (!pq.converged) {
    if (nu >= 0) return std::cyl_bessel_j(nu, z) * std::exp(lg + nu * std::log(2.0 / z));
    return static_cast<double>(bessel_series<long double>(nu, z, tol));
  }
  const double chi = z - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::exp(log_amplitude(lg, nu, z)) * (pq.p * std::cos(chi) - pq.q * std::sin(chi));
}

}  // namespace detail

inline double bessel_j_normalized(double nu, double x, double series_tol = 1e-15,
                                  double asymptotic_switch = 20.0) {
  if (!(nu > -1)) throw domain_error("bessel_j_normalized: order must exceed -1");
  const double z = std::fabs(x);
  if (z == 0) return 1.0;
  if (z <= asymptotic_switch) return static_cast<double>(detail::bessel_series<long double>(nu, z, series_tol));
  return detail::bessel_large(nu, z, std::lgamma(nu + 1.0), series_tol);
}

// Kernel evaluator with per-alpha constants cached; evaluation is const and
// thread safe.
class Kernel {
 public:
  explicit Kernel(const KernelParams& p) : p_(p) {
    p_.validate();
    nu0_ = 2 * p_.alpha - 1;
    nu1_ = 2 * p_.alpha + 1;
    ratio_ = 1.0 / (2 * p_.alpha * (2 * p_.alpha + 1));
    lg0_ = std::lgamma(nu0_ + 1);
    lg1_ = std::lgamma(nu1_ + 1);
  }
  explicit Kernel(double alpha) : Kernel(KernelParams{alpha}) {}

  const KernelParams& params() const { return p_; }
  double alpha() const { return p_.alpha; }

  double operator()(double u) const {
    if (u == 0) return 1.0;
    const double z = 2.0 * std::sqrt(std::fabs(u));
    if (z <= p_.asymptotic_switch) {
      const long double j0 = detail::bessel_series<long double>(nu0_, z, p_.series_tol);
      const long double j1 = detail::bessel_series<long double>(nu1_, z, p_.series_tol);
      return static_cast<double>(j0 - static_cast<long double>(ratio_) * u * j1);
    }
    const detail::HankelPQ a = detail::hankel_pq(nu0_, z);
    const detail::HankelPQ b = detail::hankel_pq(nu1_, z);
    if (!a.converged || !b.converged) {
      const double j0 = detail::bessel_large(nu0_, z, lg0_, p_.series_tol);
      const double j1 = detail::bessel_large(nu1_, z, lg1_, p_.series_tol);
      return j0 - ratio_ * u * j1;
    }
    // chi_{nu+2} = chi_nu - pi: both orders share one sin/cos pair.
    const double chi = z - (0.5 * nu0_ + 0.25) * std::numbers::pi;
    const double c = std::cos(chi), s = std::sin(chi);
    const double j0 = std::exp(detail::log_amplitude(lg0_, nu0_, z)) * (a.p * c - a.q * s);
    const double j1 = -std::exp(detail::log_amplitude(lg1_, nu1_, z)) * (b.p * c - b.q * s);
    return j0 - ratio_ * u * j1;
  }

 private:
  KernelParams p_;
  double nu0_ = 0, nu1_ = 0, ratio_ = 0, lg0_ = 0, lg1_ = 0;
};

inline double kernel_B(const KernelParams& params, double u) { return Kernel(params)(u); }

}  // namespace hlip
