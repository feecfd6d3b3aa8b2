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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails, either on accuracy or on its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reference_sampler.hpp"
#include "sas_privacy/adversary.hpp"
#include "sas_privacy/cli.hpp"
#include "sas_privacy/figures.hpp"
#include "sas_privacy/mechanisms.hpp"
#include "sas_privacy/privacy_loss.hpp"
#include "sas_privacy/rng.hpp"
#include "sas_privacy/sampling.hpp"
#include "sas_privacy/stable.hpp"
#include "stat_tests.hpp"

namespace {

namespace sp = sas_privacy;
namespace st = sas_privacy::testing;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  }
  return out;
}

Outcome table_one() {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sp::cli::run({"distortion", "--gamma", "1"}, out, err);
  if (code != 0) return {false, "distortion command failed: " + err.str()};
  const std::vector<double> expected = {1.1284, 1.1289, 1.1340, 1.1576, 1.1903, 1.2687};
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> alpha_text;
  std::vector<std::string> value_text;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    alpha_text.push_back(line.substr(0, comma));
    value_text.push_back(line.substr(comma + 1));
  }
  if (value_text.size() != expected.size() + 1) return {false, "unexpected row count"};
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    worst = std::max(worst, std::abs(std::stod(value_text[i]) - expected[i]));
  }
  const bool inf_ok = alpha_text.back() == "1" && value_text.back() == "inf";
  return {worst <= 5e-4 && inf_ok,
          fmt("max abs error %.2e over six finite entries", worst) +
              (inf_ok ? ", alpha=1 -> inf" : ", alpha=1 row is not inf")};
}

Outcome cauchy_closed_form() {
  double worst = 0.0;
  for (double g : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double numeric = sp::epsilon_of(sp::StableParams(1.0, g), 1.0).epsilon;
    worst = std::max(worst, rel_err(numeric, sp::cauchy_epsilon(g, 1.0)));
  }
  return {worst <= 1e-6, fmt("max relative error %.2e", worst)};
}

Outcome asymptote_windows() {
  const auto data = sp::figure("fig7");
  std::vector<double> exact;
  std::vector<double> gammas;
  for (const auto& p : data) {
    if (p.series == "cauchy") {
      gammas.push_back(p.x);
      exact.push_back(p.y);
    }
  }
  double small = 0.0;
  double large = 0.0;
  std::size_t n_small = 0;
  std::size_t n_large = 0;
  for (const auto& p : data) {
    const auto it = std::find(gammas.begin(), gammas.end(), p.x);
    const double e = exact[static_cast<std::size_t>(it - gammas.begin())];
    if (p.series == "small_gamma" && p.x <= 0.05) {
      small = std::max(small, rel_err(p.y, e));
      ++n_small;
    } else if (p.series == "large_gamma" && p.x >= 50.0) {
      large = std::max(large, rel_err(p.y, e));
      ++n_large;
    }
  }
  std::ostringstream msg;
  msg << "small-scale max rel " << fmt("%.2e", small) << " (" << n_small
      << " pts), large-scale max rel " << fmt("%.2e", large) << " (" << n_large << " pts)";
  return {n_small > 0 && n_large > 0 && small <= 0.02 && large <= 0.01, msg.str()};
}

Outcome figure_six_slope() {
  Outcome result;
  const auto gammas = logspace(1e2, 1e3, 11);
  for (double alpha : {1.2, 1.5, 1.8}) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(gammas.size());
    for (double g : gammas) {
      const double x = std::log(g);
      const double y = std::log(sp::epsilon_of(sp::StableParams(alpha, g), 1.0).epsilon);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    result.passed = result.passed && std::abs(slope + 1.0) <= 0.1;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("slope %.4f; ", slope);
  }
  return result;
}

Outcome dp_certificate() {
  Outcome result;
  for (double alpha : {1.2, 1.5, 1.8}) {
    const sp::StableParams noise(alpha, 1.0);
    const double eps = sp::epsilon_of(noise, 1.0).epsilon;
    const double bound = std::exp(eps);
    const auto shifted = noise.with_mu(1.0);
    double worst = -std::numeric_limits<double>::infinity();
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
      const double x = -1e3 + 2e3 * i / (n - 1);
      const double p1 = sp::density(shifted, x);
      const double p2 = sp::density(noise, x);
      worst = std::max({worst, p1 - bound * p2, p2 - bound * p1});
    }
    result.passed = result.passed && worst <= 1e-12;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("eps %.6f ", eps) +
                     fmt("max(p1 - e^eps p2) %.2e; ", worst);
  }
  return result;
}

Outcome gaussian_unbounded() {
  const sp::StableParams noise(2.0, 1.0);
  const auto small = sp::loss_curve(noise, 1.0, -10.0, 10.0, 2001);
  const auto large = sp::loss_curve(noise, 1.0, -1e3, 1e3, 2001);
  const double ratio = large.max_loss / small.max_loss;
  return {ratio >= 50.0, fmt("max at G=10 %.4f, ", small.max_loss) +
                             fmt("max at G=1e3 %.4f, ", large.max_loss) +
                             fmt("ratio %.1f", ratio)};
}

Outcome scale_linearity() {
  double worst = 0.0;
  for (double alpha : {1.2, 1.5, 1.9}) {
    const double base = sp::epsilon_of(sp::StableParams(alpha, 1.0), 1.0).epsilon;
    for (double c : {0.1, 10.0}) {
      const double scaled = sp::epsilon_of(sp::StableParams(alpha, c), c).epsilon;
      worst = std::max(worst, rel_err(scaled, base));
    }
  }
  return {worst <= 1e-6, fmt("max relative deviation %.2e", worst)};
}

Outcome boundary_maximization() {
  Outcome result;
  const double sensitivity = 1.0;
  for (double alpha : {1.2, 1.5}) {
    const sp::StableParams noise(alpha, 1.0);
    const double extreme = sp::max_loss_between(noise, 1.0, 0.0).epsilon;
    const double extreme_mirror = sp::max_loss_between(noise, 0.0, 1.0).epsilon;
    double interior = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double m1 = 0.25 * i;
        const double m2 = 0.25 * j;
        if (std::abs(m1 - m2) >= sensitivity) continue;
        interior = std::max(interior, sp::max_loss_between(noise, m1, m2).epsilon);
      }
    }
    const bool ok = interior <= extreme + 1e-9 && std::abs(extreme - extreme_mirror) <= 1e-9;
    result.passed = result.passed && ok;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("extreme %.9f ", extreme) +
                     fmt("best interior %.9f; ", interior);
  }
  return result;
}

Outcome strict_stability() {
  Outcome result;
  const std::size_t n = 100000;
  for (double alpha : {1.3, 1.7}) {
    const sp::StableParams unit(alpha, 1.0);
    const auto a = sp::sample_sas(unit, n, {11});
    const auto b = sp::sample_sas(unit, n, {12});
    std::vector<double> sums(n);
    for (std::size_t i = 0; i < n; ++i) sums[i] = a[i] + b[i];
    const auto single = sp::sample_sas(unit.with_gamma(std::pow(2.0, 1.0 / alpha)), n, {13});
    const auto ks = st::ks_two_sample(sums, single);
    result.passed = result.passed && ks.p_value > 0.01;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("D %.4f ", ks.statistic) +
                     fmt("p %.3f; ", ks.p_value);
  }
  return result;
}

Outcome sampler_vs_density() {
  Outcome result;
  const std::size_t n = 100000;
  for (double alpha : {1.2, 1.5, 1.8}) {
    const auto drawn = sp::sample_sas(sp::StableParams(alpha, 1.0), n, {2024});
    const st::ReferenceStableSampler reference(alpha);
    std::mt19937_64 engine(77);
    std::vector<double> ref(n);
    for (auto& v : ref) v = reference(engine);
    const auto ks = st::ks_two_sample(drawn, ref);
    result.passed = result.passed && ks.p_value > 0.01;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("D %.4f ", ks.statistic) +
                     fmt("p %.3f; ", ks.p_value);
  }
  return result;
}

Outcome mad_monte_carlo() {
  Outcome result;
  const std::size_t n = 1000000;
  for (double alpha : {1.3, 1.5, 1.8, 2.0}) {
    const sp::StableParams noise(alpha, 1.0);
    auto draws = sp::sample_sas(noise, n, {31});
    for (auto& v : draws) v = std::abs(v);
    const auto est = st::mean_with_error(draws);
    const double exact = sp::expected_distortion(sp::SasMechanism{noise});
    const double z = std::abs(est.mean - exact) / est.standard_error;
    result.passed = result.passed && z <= 3.0;
    result.detail += fmt("alpha=%.1f ", alpha) + fmt("mean %.5f ", est.mean) +
                     fmt("exact %.5f ", exact) + fmt("(%.2f SE); ", z);
  }
  return result;
}

// Mass of a standard SaS law: Simpson on [0, 20] plus a log-substituted
// Simpson on [20, 1e8] and the leading-order tail beyond.
double total_mass(double alpha) {
  const sp::StableParams p(alpha, 1.0);
  auto simpson = [](auto&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + h * i);
    return s * h / 3.0;
  };
  const double body = simpson([&](double x) { return sp::density(p, x); }, 0.0, 20.0, 4000);
  const double tail = simpson([&](double u) {
    const double x = std::exp(u);
    return sp::density(p, x) * x;
  }, std::log(20.0), std::log(1e8), 2000);
  const double far = std::tgamma(alpha + 1.0) * std::sin(alpha * std::numbers::pi / 2.0) /
                     (std::numbers::pi * alpha) * std::pow(1e8, -alpha);
  return 2.0 * (body + tail + far);
}

Outcome density_checks() {
  Outcome result;
  sp::EvalConfig cfg;
  const double cauchy_q = sp::density_by_quadrature(sp::StableParams(1.0, 1.0), 0.0, cfg);
  const double gauss_q = sp::density_by_quadrature(sp::StableParams(2.0, 1.0), 0.0, cfg);
  const double cauchy_err = std::abs(cauchy_q - 1.0 / std::numbers::pi);
  const double gauss_err = std::abs(gauss_q - 0.5 / std::sqrt(std::numbers::pi));
  double closed_worst = std::max(cauchy_err, gauss_err);
  for (double x : {0.3, 1.0, 2.5, 7.0}) {
    for (double alpha : {1.0, 2.0}) {
      const sp::StableParams p(alpha, 1.0);
      closed_worst =
          std::max(closed_worst, std::abs(sp::density_by_quadrature(p, x, cfg) - sp::density(p, x)));
    }
  }

  double mass_worst = 0.0;
  for (double alpha : {1.1, 1.2, 1.5, 1.8, 1.9}) {
    mass_worst = std::max(mass_worst, std::abs(total_mass(alpha) - 1.0));
  }

  double sym_worst = 0.0;
  std::size_t bound_violations = 0;
  for (double alpha : {1.0, 1.2, 1.5, 1.8, 2.0}) {
    const sp::StableParams p(alpha, 2.0, 3.0);
    const double bound = sp::density_upper_bound(p);
    for (int i = 0; i <= 400; ++i) {
      const double d = 0.125 * i;
      const double right = sp::density(p, 3.0 + d);
      const double left = sp::density(p, 3.0 - d);
      sym_worst = std::max(sym_worst, std::abs(right - left));
      if (right > bound || left > bound) ++bound_violations;
    }
  }
  result.passed = closed_worst <= 1e-8 && mass_worst <= 1e-4 && sym_worst <= 1e-10 &&
                  bound_violations == 0;
  result.detail = fmt("closed-form vs quadrature %.2e, ", closed_worst) +
                  fmt("mass error %.2e, ", mass_worst) + fmt("asymmetry %.2e, ", sym_worst) +
                  std::to_string(bound_violations) + " upper-bound violations";
  return result;
}

Outcome adversary() {
  Outcome result;
  const auto zero = sp::tradeoff_bound(0.0);
  const auto post_zero = sp::posterior_bounds(0.3, 0.0);
  const auto three = sp::tradeoff_bound(std::log(3.0));
  const auto post_three = sp::posterior_bounds(0.5, std::log(3.0));
  const bool exact = std::abs(zero.min_error_sum - 1.0) <= 1e-12 &&
                     std::abs(post_zero.lo - 0.3) <= 1e-12 &&
                     std::abs(post_zero.hi - 0.3) <= 1e-12 &&
                     std::abs(three.min_error_sum - 0.5) <= 1e-12 &&
                     std::abs(post_three.lo - 0.25) <= 1e-12 &&
                     std::abs(post_three.hi - 0.75) <= 1e-12;

  // Likelihood-ratio attacker distinguishing mu = 0 from mu = 1.
  const sp::StableParams noise(1.5, 1.0);
  const double eps = sp::epsilon_of(noise, 1.0).epsilon;
  const double bound = sp::tradeoff_bound(eps).min_error_sum;
  const std::size_t trials = 100000;
  const auto draws = sp::sample_sas(noise, trials, {404});
  sp::SplitMix64 coin(sp::RngSeed{405});
  std::vector<int> world(trials);
  std::vector<double> loss(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    world[i] = static_cast<int>(coin() & 1u);
    loss[i] = sp::privacy_loss(noise, draws[i] + world[i], 1.0);
  }
  double worst = std::numeric_limits<double>::infinity();
  for (double t : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    double false_pos = 0, false_neg = 0, n0 = 0, n1 = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      const bool says_one = loss[i] > t * eps;
      if (world[i] == 0) {
        ++n0;
        false_pos += says_one;
      } else {
        ++n1;
        false_neg += !says_one;
      }
    }
    worst = std::min(worst, false_pos / n0 + false_neg / n1);
  }
  result.passed = exact && worst >= bound - 0.02;
  result.detail = std::string(exact ? "exact values ok" : "exact values WRONG") +
                  fmt(", attacker min p+q %.4f", worst) + fmt(" vs bound %.4f", bound);
  return result;
}

Outcome calibration_round_trip() {
  double worst = 0.0;
  for (double alpha : {1.0, 1.5, 1.9}) {
    for (double eps : {0.1, 1.0, 5.0}) {
      const double gamma = sp::calibrate_gamma(alpha, {eps, 0.0}, 1.0);
      const double back = sp::epsilon_of(sp::StableParams(alpha, gamma), 1.0).epsilon;
      worst = std::max(worst, rel_err(back, eps));
    }
  }
  return {worst <= 1e-5, fmt("max relative error %.2e", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "distortion table", 1.0, table_one},
      {2, "Cauchy closed form", 10.0, cauchy_closed_form},
      {3, "Cauchy asymptote windows", 5.0, asymptote_windows},
      {4, "large-scale slope", 120.0, figure_six_slope},
      {5, "pure-DP certificate", 120.0, dp_certificate},
      {6, "Gaussian loss unbounded", 10.0, gaussian_unbounded},
      {7, "joint scale linearity", 60.0, scale_linearity},
      {8, "boundary maximization", 60.0, boundary_maximization},
      {9, "strict stability", 30.0, strict_stability},
      {10, "sampler vs density", 120.0, sampler_vs_density},
      {11, "mean absolute deviation", 60.0, mad_monte_carlo},
      {12, "density checks", 30.0, density_checks},
      {13, "adversary bounds", 60.0, adversary},
      {14, "calibration round trip", 120.0, calibration_round_trip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.2f s, limit %.0f s%s]\n", passed ? "PASS" : "FAIL",
                c.id, c.title, outcome.detail.c_str(), elapsed, c.time_limit_s,
                in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
