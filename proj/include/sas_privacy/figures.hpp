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

// Data series behind the published figures, in long format
// (series, x, y). Plotting is left to external tools.

#ifndef SAS_PRIVACY_FIGURES_HPP_
#define SAS_PRIVACY_FIGURES_HPP_

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "sas_privacy/adversary.hpp"
#include "sas_privacy/error.hpp"
#include "sas_privacy/privacy_loss.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy {

struct FigurePoint {
  std::string series;
  double x = 0.0;
  double y = 0.0;
};

using FigureData = std::vector<FigurePoint>;

namespace detail {

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
  auto out = linspace(std::log10(lo), std::log10(hi), n);
  for (double& v : out) v = std::pow(10.0, v);
  return out;
}

inline std::string label(const char* name, double value) {
  std::ostringstream s;
  s << name << '=' << value;
  return s.str();
}

}  // namespace detail

// Posterior bounds on the adversary's belief versus its prior, for several
// budgets.
inline FigureData figure_posterior_bounds() {
  FigureData out;
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    const std::string base = detail::label("eps", eps);
    for (double prior : detail::linspace(0.01, 0.99, 99)) {
      const auto b = posterior_bounds(prior, eps);
      out.push_back({base + ":lo", prior, b.lo});
      out.push_back({base + ":hi", prior, b.hi});
    }
  }
  return out;
}

// Loss versus observation for several alpha at gamma = 1, with neighbors at
// 0 and 1. The alpha = 2 series is the line (2x - 1) / 4.
inline FigureData figure_loss_vs_alpha(const EvalConfig& cfg = {}) {
  FigureData out;
  for (double alpha : {1.0, 1.2, 1.5, 1.8, 2.0}) {
    const auto curve = loss_curve(StableParams(alpha, 1.0), 1.0, -20.0, 20.0, 401, cfg);
    const std::string name = detail::label("alpha", alpha);
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
      out.push_back({name, curve.grid[i], curve.loss[i]});
    }
  }
  return out;
}

// Loss versus observation at alpha = 1.5 for several gamma, with neighbors at
// -1/2 and +1/2 so the curves are odd about the origin.
inline FigureData figure_loss_vs_gamma(const EvalConfig& cfg = {}) {
  FigureData out;
  for (double gamma : {0.5, 1.0, 2.0, 4.0}) {
    const StableParams noise(1.5, gamma, -0.5);
    const auto curve = loss_curve(noise, 1.0, -20.0, 20.0, 401, cfg);
    const std::string name = detail::label("gamma", gamma);
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
      out.push_back({name, curve.grid[i], curve.loss[i]});
    }
  }
  return out;
}

// Epsilon versus gamma (sensitivity 1) for alpha in {1, 1.5, 1.9}, plus the
// Laplace mechanism with b = gamma.
inline FigureData figure_epsilon_vs_gamma(const EvalConfig& cfg = {}) {
  FigureData out;
  const auto gammas = detail::logspace(1e-2, 1e3, 51);
  for (double alpha : {1.0, 1.5, 1.9}) {
    const std::string name = detail::label("alpha", alpha);
    for (double g : gammas) {
      out.push_back({name, g, epsilon_of(StableParams(alpha, g), 1.0, cfg).epsilon});
    }
  }
  for (double g : gammas) out.push_back({"laplace", g, laplace_epsilon(g, 1.0)});
  return out;
}

// Cauchy budget versus gamma with its small- and large-scale approximations
// and the Laplace reference.
inline FigureData figure_cauchy_asymptotes() {
  FigureData out;
  const auto gammas = detail::logspace(1e-3, 1e3, 61);
  for (double g : gammas) out.push_back({"cauchy", g, cauchy_epsilon(g, 1.0)});
  for (double g : gammas) out.push_back({"small_gamma", g, cauchy_epsilon_small_gamma(g, 1.0)});
  for (double g : gammas) out.push_back({"large_gamma", g, cauchy_epsilon_large_gamma(g, 1.0)});
  for (double g : gammas) out.push_back({"laplace", g, laplace_epsilon(g, 1.0)});
  return out;
}

// Location of the minimum of Gamma on the positive axis: the root of the
// digamma function in (1, 2), by Newton's method.
inline double gamma_function_argmin() {
  double x = 1.5;
  for (int i = 0; i < 50; ++i) {
    const double step = boost::math::digamma(x) / boost::math::trigamma(x);
    x -= step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

// Gamma(x) on (0, 3], the slice 1 - 1/alpha in [0, 1/2) that drives the
// distortion, and the minimum near x = 1.462.
inline FigureData figure_gamma_function() {
  FigureData out;
  for (double x : detail::linspace(0.05, 3.0, 296)) out.push_back({"gamma", x, std::tgamma(x)});
  for (double x : detail::linspace(0.01, 0.5, 50)) {
    out.push_back({"distortion_window", x, std::tgamma(x)});
  }
  const double xmin = gamma_function_argmin();
  out.push_back({"minimum", xmin, std::tgamma(xmin)});
  return out;
}

inline const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2", "fig4", "fig5", "fig6", "fig7", "fig8"};
  return names;
}

inline FigureData figure(const std::string& name, const EvalConfig& cfg = {}) {
  if (name == "fig2") return figure_posterior_bounds();
  if (name == "fig4") return figure_loss_vs_alpha(cfg);
  if (name == "fig5") return figure_loss_vs_gamma(cfg);
  if (name == "fig6") return figure_epsilon_vs_gamma(cfg);
  if (name == "fig7") return figure_cauchy_asymptotes();
  if (name == "fig8") return figure_gamma_function();
  throw DomainError("unknown figure '" + name + "'");
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_FIGURES_HPP_
