// Copyright 2026 The SaS Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Symmetric alpha-stable (SaS) laws with stability alpha in [1, 2].
//
// The characteristic function is phi(t) = exp(i t mu - |gamma t|^alpha).
// Alpha = 1 is the Cauchy law and alpha = 2 the Gaussian with variance
// 2 gamma^2; both are evaluated in closed form. Everything in between goes
// through the cosine form of the inversion integral
//
//   p(x) = (1 / (pi gamma)) * Int_0^inf exp(-s^alpha) cos(s z) ds,
//   z = (x - mu) / gamma,
//
// or, far from the mode, through the asymptotic tail series.

#ifndef SAS_PRIVACY_STABLE_HPP_
#define SAS_PRIVACY_STABLE_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/sin_pi.hpp>

#include "sas_privacy/error.hpp"
#include "sas_privacy/quadrature.hpp"

namespace sas_privacy {

// Alpha values this close to 1 or 2 are snapped onto the closed forms.
inline constexpr double kAlphaSnap = 1e-12;

// (alpha, gamma, mu) of a symmetric stable law. Beta is always zero.
class StableParams {
 public:
  StableParams(double alpha, double gamma, double mu = 0.0)
      : alpha_(snap(alpha)), gamma_(gamma), mu_(mu) {
    if (!(alpha_ >= 1.0 && alpha_ <= 2.0)) {
      std::ostringstream msg;
      msg << "alpha must lie in [1, 2], got " << alpha;
      throw DomainError(msg.str());
    }
    if (!(gamma_ > 0.0) || !std::isfinite(gamma_)) {
      std::ostringstream msg;
      msg << "gamma must be positive and finite, got " << gamma;
      throw DomainError(msg.str());
    }
    if (!std::isfinite(mu_)) throw DomainError("mu must be finite");
  }

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double mu() const { return mu_; }

  bool is_cauchy() const { return alpha_ == 1.0; }
  bool is_gaussian() const { return alpha_ == 2.0; }

  StableParams with_mu(double mu) const { return {alpha_, gamma_, mu}; }
  StableParams with_gamma(double gamma) const { return {alpha_, gamma, mu_}; }

  // Standardized distance from the location parameter.
  double standardize(double x) const { return (x - mu_) / gamma_; }

  friend bool operator==(const StableParams&, const StableParams&) = default;

 private:
  static double snap(double alpha) {
    if (std::abs(alpha - 1.0) <= kAlphaSnap) return 1.0;
    if (std::abs(alpha - 2.0) <= kAlphaSnap) return 2.0;
    return alpha;
  }

  double alpha_;
  double gamma_;
  double mu_;
};

// Numerical knobs for density evaluation.
struct EvalConfig {
  double quad_rel_tol = 1e-9;
  double quad_abs_tol = 1e-12;
  // |x - mu| / gamma at and beyond which the tail series replaces quadrature.
  double tail_crossover = 20.0;
  int series_terms = 10;

  void validate() const {
    if (!(quad_rel_tol > 0.0) || !(quad_abs_tol > 0.0)) {
      throw DomainError("quadrature tolerances must be positive");
    }
    if (!(tail_crossover > 1.0)) throw DomainError("tail_crossover must exceed 1");
    if (series_terms < 1 || series_terms > 10) {
      throw DomainError("series_terms must lie in [1, 10]");
    }
  }
};

inline std::complex<double> characteristic(const StableParams& params, double t) {
  const double magnitude = std::pow(std::abs(params.gamma() * t), params.alpha());
  return std::exp(std::complex<double>(-magnitude, t * params.mu()));
}

// Gamma(1/alpha) / (alpha gamma pi): the density at the mode, and a global
// upper bound since |phi| <= exp(-|gamma t|^alpha).
inline double density_upper_bound(const StableParams& params) {
  const double a = params.alpha();
  return std::tgamma(1.0 / a) / (a * params.gamma() * std::numbers::pi);
}

namespace detail {

inline double cauchy_standard(double z) { return 1.0 / (std::numbers::pi * (1.0 + z * z)); }

inline double gaussian_standard(double z) {
  return std::exp(-0.25 * z * z) / (2.0 * std::sqrt(std::numbers::pi));
}

// Tail expansion of the unit-scale density at distance z > 1 from the mode:
//   (1/pi) sum_{k=1}^{n} (-1)^(k+1) Gamma(alpha k + 1) / k!
//            * sin(k alpha pi / 2) * z^-(alpha k + 1)
inline double tail_series_standard(double alpha, double z, int n) {
  double sum = 0.0;
  double log_factorial = 0.0;
  const double log_z = std::log(z);
  for (int k = 1; k <= n; ++k) {
    log_factorial += std::log(static_cast<double>(k));
    const double ak = alpha * k;
    const double magnitude = std::exp(std::lgamma(ak + 1.0) - log_factorial - (ak + 1.0) * log_z);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += sign * magnitude * boost::math::sin_pi(ak / 2.0);
  }
  return sum / std::numbers::pi;
}

// Cosine-form inversion integral for the unit-scale density at z >= 0.
inline double quadrature_standard(double alpha, double z, const EvalConfig& cfg) {
  CosineTransformOptions opts;
  opts.rel_tol = cfg.quad_rel_tol;
  opts.abs_tol = cfg.quad_abs_tol * std::numbers::pi;
  // exp(-45) ~ 3e-20 sits far below any tolerance in use.
  opts.cutoff = std::pow(45.0, 1.0 / alpha);
  const auto envelope = [alpha](double s) { return std::exp(-std::pow(s, alpha)); };
  return cosine_transform(envelope, z, opts).value / std::numbers::pi;
}

}  // namespace detail

// Tail series at x for unit-scale-rescaled distance z = |x - mu| / gamma,
// divided by gamma. Requires alpha in [1, 2] and z > 1.
inline double tail_series(const StableParams& params, double x, int n) {
  const double z = std::abs(params.standardize(x));
  if (!(z > 1.0)) {
    std::ostringstream msg;
    msg << "tail series needs |x - mu| / gamma > 1, got " << z;
    throw DomainError(msg.str());
  }
  if (n < 1) throw DomainError("tail series needs at least one term");
  return detail::tail_series_standard(params.alpha(), z, n) / params.gamma();
}

// Near-mode series
//   (1/pi) sum_{k=0}^{n} (-1)^k Gamma((k+1)/alpha) / (k! alpha) z^k cos(k pi / 2)
// divided by gamma. Odd k vanish.
inline double origin_series(const StableParams& params, double x, int n) {
  const double a = params.alpha();
  if (!(a > 1.0 && a < 2.0)) {
    std::ostringstream msg;
    msg << "origin series needs alpha in (1, 2), got " << a;
    throw DomainError(msg.str());
  }
  if (n < 0) throw DomainError("origin series needs n >= 0");
  const double z = params.standardize(x);
  const double z2 = z * z;
  double sum = 0.0;
  double power = 1.0;  // z^k for even k
  double factorial = 1.0;
  for (int k = 0; k <= n; k += 2) {
    if (k > 0) {
      power *= z2;
      factorial *= static_cast<double>(k - 1) * k;
    }
    // (-1)^k cos(k pi / 2) = (-1)^(k/2) for even k.
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::tgamma((k + 1.0) / a) / (factorial * a) * power;
  }
  return sum / (std::numbers::pi * params.gamma());
}

// Density evaluated by the inversion integral regardless of alpha. Exposed so
// the closed forms at alpha = 1 and 2 can be checked against it.
inline double density_by_quadrature(const StableParams& params, double x,
                                    const EvalConfig& cfg = {}) {
  const double z = std::abs(params.standardize(x));
  return detail::quadrature_standard(params.alpha(), z, cfg) / params.gamma();
}

inline double density(const StableParams& params, double x, const EvalConfig& cfg = {}) {
  const double z = std::abs(params.standardize(x));
  if (params.is_cauchy()) return detail::cauchy_standard(z) / params.gamma();
  if (params.is_gaussian()) return detail::gaussian_standard(z) / params.gamma();
  // The mode value is known exactly.
  if (z == 0.0) return density_upper_bound(params);
  if (z >= cfg.tail_crossover) {
    return detail::tail_series_standard(params.alpha(), z, cfg.series_terms) / params.gamma();
  }
  return detail::quadrature_standard(params.alpha(), z, cfg) / params.gamma();
}

inline double log_density(const StableParams& params, double x, const EvalConfig& cfg = {}) {
  if (params.is_cauchy()) {
    const double z = std::abs(params.standardize(x));
    // ln(1 + z^2) without overflowing z^2.
    const double log_tail = z > 1e150 ? 2.0 * std::log(z) : std::log1p(z * z);
    return -std::log(std::numbers::pi * params.gamma()) - log_tail;
  }
  if (params.is_gaussian()) {
    const double z = params.standardize(x);
    return -0.25 * z * z - std::log(2.0 * std::sqrt(std::numbers::pi) * params.gamma());
  }
  return std::log(density(params, x, cfg));
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_STABLE_HPP_
