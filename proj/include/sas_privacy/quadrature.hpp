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

// Fourier cosine transform of a positive, monotonically decaying envelope.
//
// The integral over [0, inf) of envelope(t) * cos(omega * t) is split at the
// zeros of the cosine, t_k = (k + 1/2) * pi / omega. Inside each panel the
// integrand keeps one sign, so a Gauss-Kronrod rule converges quickly and the
// panel values form an alternating series. The series is truncated once the
// envelope has dropped below machine resolution.

#ifndef SAS_PRIVACY_QUADRATURE_HPP_
#define SAS_PRIVACY_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sas_privacy/error.hpp"

namespace sas_privacy {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

struct CosineTransformOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  // Envelope is treated as zero beyond this point.
  double cutoff = 50.0;
  // Below this frequency the whole range is integrated in one adaptive pass.
  double slow_omega = 0.1;
  unsigned max_depth = 15;
  std::size_t max_panels = 200000;
};

namespace detail {

template <class F>
double integrate_panel(const F& f, double a, double b, double tol, unsigned max_depth,
                       double* error) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  double err = 0.0;
  const double value = Rule::integrate(f, a, b, max_depth, tol, &err);
  *error = err;
  return value;
}

// The first panel starts at t = 0 where envelopes such as exp(-t^alpha) are
// not smooth; tanh-sinh absorbs endpoint singularities of that kind.
template <class F>
double integrate_first_panel(const F& f, double a, double b, double tol, double* error) {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
  double err = 0.0;
  double l1 = 0.0;
  const double value = rule.integrate(f, a, b, tol, &err, &l1);
  *error = err;
  return value;
}

}  // namespace detail

// Returns the integral over [0, inf) of envelope(t) * cos(omega * t).
// Throws QuadratureNotConverged when the accumulated error estimate exceeds
// max(abs_tol, rel_tol * |value|).
template <class Envelope>
QuadratureResult cosine_transform(const Envelope& envelope, double omega,
                                  const CosineTransformOptions& opts) {
  omega = std::abs(omega);
  auto integrand = [&](double t) { return envelope(t) * std::cos(omega * t); };
  // Panels are resolved far below the requested tolerance: cancellation
  // between panels can amplify their individual errors.
  const double panel_tol = std::min(opts.rel_tol, 1e-12);

  QuadratureResult result;
  if (omega * opts.cutoff <= std::numbers::pi / 2 || omega < opts.slow_omega) {
    result.value = detail::integrate_first_panel(integrand, 0.0, opts.cutoff, panel_tol,
                                                 &result.error);
    result.panels = 1;
  } else {
    const double half_period = std::numbers::pi / omega;
    double lo = 0.0;
    double hi = 0.5 * half_period;
    for (std::size_t k = 0;; ++k) {
      if (k >= opts.max_panels) {
        throw QuadratureNotConverged("cosine transform: panel limit reached");
      }
      const bool last = hi >= opts.cutoff;
      if (last) hi = opts.cutoff;
      // The remaining terms alternate with shrinking magnitude, so the first
      // dropped panel bounds the truncation error.
      const double tail_bound = envelope(lo) * (hi - lo);
      if (k > 0 && tail_bound <= 1e-6 * opts.abs_tol) {
        result.error += tail_bound;
        break;
      }
      double err = 0.0;
      result.value += (k == 0)
                          ? detail::integrate_first_panel(integrand, lo, hi, panel_tol, &err)
                          : detail::integrate_panel(integrand, lo, hi, panel_tol,
                                                    opts.max_depth, &err);
      result.error += err;
      ++result.panels;
      if (last) break;
      lo = hi;
      hi = 0.5 * half_period + static_cast<double>(k + 1) * half_period;
    }
  }

  const double allowed = std::max(opts.abs_tol, opts.rel_tol * std::abs(result.value));
  if (!(result.error <= allowed) || !std::isfinite(result.value)) {
    std::ostringstream msg;
    msg << "cosine transform did not converge: omega=" << omega
        << " value=" << result.value << " error=" << result.error
        << " allowed=" << allowed;
    throw QuadratureNotConverged(msg.str());
  }
  return result;
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_QUADRATURE_HPP_
