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

// Privacy loss of the SaS mechanism between two neighboring query answers,
// the privacy budget as its maximum, and the inverse map from a budget to a
// noise scale.
//
// With the noise located at mu for one dataset and at mu + sensitivity for
// its neighbor, the loss at observation x is
//
//   L(x) = ln p(x; alpha, gamma, mu + sensitivity) - ln p(x; alpha, gamma, mu).
//
// For alpha in [1, 2) it is bounded and its maximum is the pure-DP epsilon.
// The maximizer always lies at or beyond the shifted location, which is
// where the search starts.

#ifndef SAS_PRIVACY_PRIVACY_LOSS_HPP_
#define SAS_PRIVACY_PRIVACY_LOSS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "sas_privacy/error.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy {

struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;

  bool is_pure() const { return delta == 0.0; }

  void validate() const {
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("delta must lie in [0, 1]");
  }
};

struct LossCurve {
  std::vector<double> grid;
  std::vector<double> loss;
  double argmax_x = 0.0;
  double max_loss = 0.0;
};

struct MaxLoss {
  double epsilon = 0.0;
  double argmax_x = 0.0;
};

namespace detail {

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw DomainError(msg.str());
  }
}

}  // namespace detail

// ln p(x; mu1) - ln p(x; mu2) for noise shape (alpha, gamma); the location of
// `noise` is ignored. Closed forms at alpha = 1 and 2, so the Gaussian loss is
// exactly affine in x.
inline double loss_between(const StableParams& noise, double mu1, double mu2, double x,
                           const EvalConfig& cfg = {}) {
  const double g = noise.gamma();
  if (noise.is_gaussian()) {
    return (mu1 - mu2) * (2.0 * x - mu1 - mu2) / (4.0 * g * g);
  }
  if (noise.is_cauchy()) {
    const double z1 = (x - mu1) / g;
    const double z2 = (x - mu2) / g;
    return std::log1p(z2 * z2) - std::log1p(z1 * z1);
  }
  // Both densities share one configuration so their errors largely cancel.
  return std::log(density(noise.with_mu(mu1), x, cfg)) -
         std::log(density(noise.with_mu(mu2), x, cfg));
}

// Loss at x between noise located at noise.mu() + sensitivity and at noise.mu().
inline double privacy_loss(const StableParams& noise, double x, double sensitivity,
                           const EvalConfig& cfg = {}) {
  detail::require_positive(sensitivity, "sensitivity");
  return loss_between(noise, noise.mu() + sensitivity, noise.mu(), x, cfg);
}

// Maximum over x of loss_between(noise, mu1, mu2, x) for alpha in [1, 2).
//
// Starting at the larger location, the step doubles until the loss drops,
// which brackets the peak; golden-section search then refines it. The loss
// is assumed unimodal beyond the larger location.
inline MaxLoss max_loss_between(const StableParams& noise, double mu1, double mu2,
                                const EvalConfig& cfg = {}) {
  if (noise.is_gaussian()) {
    throw DomainError("the Gaussian (alpha = 2) privacy loss is unbounded");
  }
  if (mu1 == mu2) return {0.0, mu1};
  // Mirror so that mu1 > mu2; the loss is odd under the reflection.
  const double sign = mu1 > mu2 ? 1.0 : -1.0;
  const double separation = std::abs(mu1 - mu2);
  const double g = noise.gamma();
  auto loss = [&](double x) { return loss_between(noise, mu1, mu2, sign * x, cfg); };
  const double start = sign * mu1;

  const double scale = std::max(g, separation);
  const double ceiling = 1e8 * scale;
  double step = 0.25 * g;
  double lo = start;
  double mid = start;
  double f_mid = loss(start);
  double hi = start + step;
  double f_hi = loss(hi);
  while (f_hi > f_mid) {
    lo = mid;
    mid = hi;
    f_mid = f_hi;
    step *= 2.0;
    hi = mid + step;
    if (hi - start > ceiling) {
      std::ostringstream msg;
      msg << "privacy loss still increasing at x = " << sign * hi;
      throw MaxNotBracketed(msg.str());
    }
    f_hi = loss(hi);
  }

  // Golden-section search on [lo, hi]; the best point seen is kept.
  constexpr double kInvPhi = 0.6180339887498949;
  const double tol = 1e-10 * scale;
  double best_x = mid;
  double best_f = f_mid;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = loss(c);
  double fd = loss(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = loss(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = loss(d);
    }
    if (fc > best_f) {
      best_f = fc;
      best_x = c;
    }
    if (fd > best_f) {
      best_f = fd;
      best_x = d;
    }
  }
  return {best_f, sign * best_x};
}

inline MaxLoss max_privacy_loss(const StableParams& noise, double sensitivity,
                                const EvalConfig& cfg = {}) {
  detail::require_positive(sensitivity, "sensitivity");
  return max_loss_between(noise, noise.mu() + sensitivity, noise.mu(), cfg);
}

inline PrivacyBudget epsilon_of(const StableParams& noise, double sensitivity,
                                const EvalConfig& cfg = {}) {
  return {max_privacy_loss(noise, sensitivity, cfg).epsilon, 0.0};
}

// Cauchy (alpha = 1) budget
//   ln[(sqrt(4 r^2 + 1) + 1) / (sqrt(4 r^2 + 1) - 1)],  r = gamma / sensitivity,
// evaluated as the equivalent 2 asinh(1 / (2 r)) to avoid cancellation.
inline double cauchy_epsilon(double gamma, double sensitivity) {
  detail::require_positive(gamma, "gamma");
  detail::require_positive(sensitivity, "sensitivity");
  return 2.0 * std::asinh(sensitivity / (2.0 * gamma));
}

// Small-scale behavior of the Cauchy budget: 2 ln(sensitivity / gamma), the
// leading term of 2 asinh(sensitivity / (2 gamma)) as gamma -> 0.
inline double cauchy_epsilon_small_gamma(double gamma, double sensitivity) {
  detail::require_positive(gamma, "gamma");
  detail::require_positive(sensitivity, "sensitivity");
  return 2.0 * std::log(sensitivity / gamma);
}

// Large-scale behavior of the Cauchy budget: sensitivity / gamma.
inline double cauchy_epsilon_large_gamma(double gamma, double sensitivity) {
  detail::require_positive(gamma, "gamma");
  detail::require_positive(sensitivity, "sensitivity");
  return sensitivity / gamma;
}

inline double laplace_epsilon(double b, double sensitivity) {
  detail::require_positive(b, "b");
  detail::require_positive(sensitivity, "sensitivity");
  return sensitivity / b;
}

// Budget of an m-dimensional query with independent per-coordinate noise.
inline double vector_epsilon_bound(double scalar_epsilon, std::size_t m) {
  if (m < 1) throw DomainError("dimension must be at least 1");
  if (!(scalar_epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
  return static_cast<double>(m) * scalar_epsilon;
}

// Scale gamma at which the alpha-stable mechanism spends exactly target.epsilon.
//
// Alpha = 1 inverts the Cauchy budget analytically. Otherwise the budget is
// bracketed, checked to be decreasing at 8 log-spaced scales, and bisected in
// log(gamma).
inline double calibrate_gamma(double alpha, const PrivacyBudget& target, double sensitivity,
                              const EvalConfig& cfg = {}) {
  target.validate();
  if (!(target.epsilon > 0.0) || !std::isfinite(target.epsilon)) {
    throw DomainError("target epsilon must be positive and finite");
  }
  if (!target.is_pure()) throw DomainError("calibration supports pure DP only (delta = 0)");
  detail::require_positive(sensitivity, "sensitivity");
  const StableParams shape(alpha, 1.0);
  if (shape.is_gaussian()) throw DomainError("alpha = 2 gives no pure-DP budget");

  const double cauchy_gamma = sensitivity / (2.0 * std::sinh(0.5 * target.epsilon));
  if (shape.is_cauchy()) return cauchy_gamma;

  auto eps = [&](double log_gamma) {
    return max_privacy_loss(shape.with_gamma(std::exp(log_gamma)), sensitivity, cfg).epsilon;
  };

  // Bracket: eps(lo) >= target >= eps(hi).
  constexpr double kFactor = 1.3862943611198906;  // ln 4
  double lo = std::log(cauchy_gamma);
  double hi = lo;
  double f_lo = eps(lo);
  double f_hi = f_lo;
  int expansions = 0;
  while (f_lo < target.epsilon) {
    hi = lo;
    f_hi = f_lo;
    lo -= kFactor;
    f_lo = eps(lo);
    if (++expansions > 40) throw CalibrationFailed("could not bracket target epsilon from above");
  }
  while (f_hi > target.epsilon) {
    lo = hi;
    f_lo = f_hi;
    hi += kFactor;
    f_hi = eps(hi);
    if (++expansions > 40) throw CalibrationFailed("could not bracket target epsilon from below");
  }

  // Monotonicity scan, which also narrows the bracket.
  constexpr int kScan = 8;
  std::array<double, kScan> log_gammas{};
  std::array<double, kScan> values{};
  for (int i = 0; i < kScan; ++i) {
    log_gammas[i] = lo + (hi - lo) * i / (kScan - 1);
    values[i] = (i == 0) ? f_lo : (i == kScan - 1) ? f_hi : eps(log_gammas[i]);
    if (i > 0 && !(values[i] < values[i - 1])) {
      std::ostringstream msg;
      msg << "epsilon is not decreasing in gamma near gamma = " << std::exp(log_gammas[i]);
      throw CalibrationFailed(msg.str());
    }
  }
  for (int i = 1; i < kScan; ++i) {
    if (values[i] <= target.epsilon) {
      lo = log_gammas[i - 1];
      hi = log_gammas[i];
      break;
    }
  }

  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eps(mid);
    if (f_mid == target.epsilon) return std::exp(mid);
    if (f_mid > target.epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

// Loss on an inclusive grid of n_points between xmin and xmax.
inline LossCurve loss_curve(const StableParams& noise, double sensitivity, double xmin,
                            double xmax, std::size_t n_points, const EvalConfig& cfg = {}) {
  detail::require_positive(sensitivity, "sensitivity");
  if (!(xmin < xmax)) throw DomainError("loss curve needs xmin < xmax");
  if (n_points < 2) throw DomainError("loss curve needs at least two points");
  LossCurve curve;
  curve.grid.reserve(n_points);
  curve.loss.reserve(n_points);
  const double span = xmax - xmin;
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = (i + 1 == n_points) ? xmax : xmin + span * static_cast<double>(i) / last;
    curve.grid.push_back(x);
    curve.loss.push_back(privacy_loss(noise, x, sensitivity, cfg));
  }
  const auto it = std::max_element(curve.loss.begin(), curve.loss.end());
  curve.max_loss = *it;
  curve.argmax_x = curve.grid[static_cast<std::size_t>(it - curve.loss.begin())];
  return curve;
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_PRIVACY_LOSS_HPP_
