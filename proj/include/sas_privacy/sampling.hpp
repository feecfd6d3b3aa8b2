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

// Noise generators for the SaS, Laplace and Gaussian mechanisms.
//
// All transforms are written out here rather than taken from <random> so
// that a seed produces the same stream with every standard library.

#ifndef SAS_PRIVACY_SAMPLING_HPP_
#define SAS_PRIVACY_SAMPLING_HPP_

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "sas_privacy/error.hpp"
#include "sas_privacy/rng.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy {

// Standard normal via the Box-Muller transform. Draws come in pairs; the
// second value of each pair is cached.
class GaussianSource {
 public:
  double operator()(SplitMix64& rng) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(rng.uniform_open()));
    const double angle = 2.0 * std::numbers::pi * rng.uniform_open();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline double draw_laplace(SplitMix64& rng, double b) {
  const double u = rng.uniform_open() - 0.5;
  const double magnitude = -b * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

// Unit-scale symmetric stable variate by the Chambers-Mallows-Stuck method
// with beta = 0. Alpha = 2 is handled by the caller.
inline double draw_standard_stable(SplitMix64& rng, double alpha) {
  const double u = std::numbers::pi * (rng.uniform_open() - 0.5);
  if (alpha == 1.0) return std::tan(u);
  const double w = -std::log(rng.uniform_open());
  return std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha) *
         std::pow(std::cos(u - alpha * u) / w, (1.0 - alpha) / alpha);
}

// Stateful SaS noise source. Gaussian draws (alpha = 2) use Box-Muller with
// standard deviation gamma * sqrt(2).
class StableSampler {
 public:
  explicit StableSampler(const StableParams& params) : params_(params) {}

  double operator()(SplitMix64& rng) {
    const double standard = params_.is_gaussian()
                                ? std::numbers::sqrt2 * gaussian_(rng)
                                : draw_standard_stable(rng, params_.alpha());
    return params_.mu() + params_.gamma() * standard;
  }

  const StableParams& params() const { return params_; }

 private:
  StableParams params_;
  GaussianSource gaussian_;
};

inline std::vector<double> sample_sas(const StableParams& params, std::size_t n, RngSeed seed) {
  SplitMix64 rng(seed);
  StableSampler sampler(params);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler(rng));
  return out;
}

inline std::vector<double> sample_laplace(double b, std::size_t n, RngSeed seed) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("Laplace scale b must be positive");
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw_laplace(rng, b));
  return out;
}

inline std::vector<double> sample_gaussian(double sigma, std::size_t n, RngSeed seed) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("Gaussian sigma must be positive");
  }
  SplitMix64 rng(seed);
  GaussianSource gaussian;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sigma * gaussian(rng));
  return out;
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_SAMPLING_HPP_
