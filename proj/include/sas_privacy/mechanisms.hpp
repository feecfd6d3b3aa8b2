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

// Bounded queries and the additive noise mechanisms applied to them.

#ifndef SAS_PRIVACY_MECHANISMS_HPP_
#define SAS_PRIVACY_MECHANISMS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "sas_privacy/dataset.hpp"
#include "sas_privacy/error.hpp"
#include "sas_privacy/privacy_loss.hpp"
#include "sas_privacy/rng.hpp"
#include "sas_privacy/sampling.hpp"
#include "sas_privacy/stable.hpp"

namespace sas_privacy {

enum class QueryKind { kCount, kSum, kMean, kCustom };

// Worst-case change of a query answer between datasets that differ by the
// presence or absence of one record.
struct Sensitivity {
  double l1 = 0.0;
  double l2 = 0.0;
  // Largest change of any single output coordinate.
  double coordinate = 0.0;
};

struct QuerySpec {
  QueryKind kind = QueryKind::kCount;
  // Every record value (or the count) is clipped into [range_lo, range_hi].
  double range_lo = 0.0;
  double range_hi = 1.0;
  // Sum and mean produce one output coordinate per column.
  std::vector<std::string> columns;
  // Custom queries supply the answer and its sensitivity themselves.
  std::function<std::vector<double>(const Dataset&)> custom;
  std::optional<Sensitivity> custom_sensitivity;
  std::size_t custom_dimension = 1;

  std::size_t dimension() const {
    switch (kind) {
      case QueryKind::kCount:
        return 1;
      case QueryKind::kSum:
      case QueryKind::kMean:
        return columns.size();
      case QueryKind::kCustom:
        return custom_dimension;
    }
    return 0;
  }

  double width() const { return range_hi - range_lo; }

  void validate() const {
    if (!(range_lo < range_hi) || !std::isfinite(range_lo) || !std::isfinite(range_hi)) {
      throw DomainError("query range must satisfy lo < hi");
    }
    if (dimension() < 1) throw DomainError("query dimension must be at least 1");
    if (kind == QueryKind::kCustom) {
      if (!custom) throw DomainError("custom query needs a callable");
      if (!custom_sensitivity || !(custom_sensitivity->l1 > 0.0)) {
        throw DomainError("custom query needs a positive declared sensitivity");
      }
    }
  }
};

inline double clip(double value, double lo, double hi) { return std::clamp(value, lo, hi); }

// Sensitivity of the built-in queries over a dataset of n_records rows:
// count 1, clipped sum the range width, clipped mean the width over n.
inline Sensitivity query_sensitivity(const QuerySpec& q, std::size_t n_records) {
  q.validate();
  const double m = static_cast<double>(q.dimension());
  double per_coordinate = 0.0;
  switch (q.kind) {
    case QueryKind::kCount:
      per_coordinate = 1.0;
      break;
    case QueryKind::kSum:
      per_coordinate = q.width();
      break;
    case QueryKind::kMean:
      if (n_records == 0) throw EmptyDataset("mean over an empty dataset");
      per_coordinate = q.width() / static_cast<double>(n_records);
      break;
    case QueryKind::kCustom:
      return *q.custom_sensitivity;
  }
  return {m * per_coordinate, std::sqrt(m) * per_coordinate, per_coordinate};
}

// Exact, non-private answer of length q.dimension().
inline std::vector<double> run_query(const Dataset& data, const QuerySpec& q) {
  q.validate();
  switch (q.kind) {
    case QueryKind::kCount:
      return {clip(static_cast<double>(data.size()), q.range_lo, q.range_hi)};
    case QueryKind::kSum:
    case QueryKind::kMean: {
      if (q.kind == QueryKind::kMean && data.empty()) {
        throw EmptyDataset("mean over an empty dataset");
      }
      std::vector<double> out;
      out.reserve(q.columns.size());
      for (const auto& name : q.columns) {
        double total = 0.0;
        for (double v : data.numeric_column(name)) total += clip(v, q.range_lo, q.range_hi);
        out.push_back(q.kind == QueryKind::kMean ? total / static_cast<double>(data.size())
                                                 : total);
      }
      return out;
    }
    case QueryKind::kCustom: {
      auto out = q.custom(data);
      if (out.size() != q.custom_dimension) {
        throw SchemaError("custom query returned the wrong number of values");
      }
      return out;
    }
  }
  return {};
}

struct SasMechanism {
  // Only alpha and gamma matter; the noise is centered at zero.
  StableParams noise;
};

struct LaplaceMechanism {
  double b = 1.0;
};

struct GaussianMechanism {
  double sigma = 1.0;
};

using MechanismKind = std::variant<SasMechanism, LaplaceMechanism, GaussianMechanism>;

namespace detail {

// Noise source bound to one mechanism and one generator.
class NoiseSource {
 public:
  NoiseSource(const MechanismKind& mech, RngSeed seed)
      : mech_(mech), rng_(seed), stable_(stable_params(mech)) {
    if (const auto* lap = std::get_if<LaplaceMechanism>(&mech_)) {
      require_positive(lap->b, "Laplace scale b");
    } else if (const auto* gau = std::get_if<GaussianMechanism>(&mech_)) {
      require_positive(gau->sigma, "Gaussian sigma");
    }
  }

  double operator()() {
    return std::visit(
        [this](const auto& m) -> double {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, SasMechanism>) {
            return stable_(rng_);
          } else if constexpr (std::is_same_v<T, LaplaceMechanism>) {
            return draw_laplace(rng_, m.b);
          } else {
            return m.sigma * gaussian_(rng_);
          }
        },
        mech_);
  }

 private:
  static StableParams stable_params(const MechanismKind& mech) {
    if (const auto* sas = std::get_if<SasMechanism>(&mech)) return sas->noise.with_mu(0.0);
    return StableParams(2.0, 1.0);
  }

  MechanismKind mech_;
  SplitMix64 rng_;
  StableSampler stable_;
  GaussianSource gaussian_;
};

}  // namespace detail

// answer + (Y_1, ..., Y_m) with independent per-coordinate noise.
inline std::vector<double> apply_mechanism(std::span<const double> answer,
                                           const MechanismKind& mech, RngSeed seed) {
  detail::NoiseSource noise(mech, seed);
  std::vector<double> out(answer.begin(), answer.end());
  for (double& v : out) v += noise();
  return out;
}

// Perturbs each record value independently before any aggregation, as a
// client would under local DP.
inline std::vector<double> local_apply(std::span<const double> record_values,
                                       const MechanismKind& mech, RngSeed seed) {
  return apply_mechanism(record_values, mech, seed);
}

// Scale of the SaS noise carried by a sum of n locally perturbed values:
// n^(1/alpha) * gamma.
inline double aggregate_noise_scale(std::size_t n, double alpha, double gamma) {
  if (n < 1) throw DomainError("aggregate needs at least one record");
  const StableParams params(alpha, gamma);
  return std::pow(static_cast<double>(n), 1.0 / params.alpha()) * params.gamma();
}

// Mean absolute deviation E|Y| of the noise. For SaS it is
// (2 gamma / pi) Gamma(1 - 1/alpha), which is infinite at alpha = 1.
inline double expected_distortion(const MechanismKind& mech) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SasMechanism>) {
          const double a = m.noise.alpha();
          if (a == 1.0) return std::numeric_limits<double>::infinity();
          return 2.0 * m.noise.gamma() / std::numbers::pi * std::tgamma(1.0 - 1.0 / a);
        } else if constexpr (std::is_same_v<T, LaplaceMechanism>) {
          return m.b;
        } else {
          return std::sqrt(2.0 / std::numbers::pi) * m.sigma;
        }
      },
      mech);
}

struct DistortionRow {
  double alpha = 0.0;
  double distortion = 0.0;
};

inline std::vector<DistortionRow> distortion_table(std::span<const double> alphas,
                                                   double gamma) {
  std::vector<DistortionRow> rows;
  rows.reserve(alphas.size());
  for (double a : alphas) {
    const StableParams params(a, gamma);
    rows.push_back({a, expected_distortion(SasMechanism{params})});
  }
  return rows;
}

// Pure-DP budget spent by one release of a query with the given sensitivity,
// or nullopt when the mechanism has none (Gaussian).
inline std::optional<double> mechanism_epsilon(const MechanismKind& mech,
                                               const Sensitivity& sens, std::size_t dimension,
                                               const EvalConfig& cfg = {}) {
  if (const auto* sas = std::get_if<SasMechanism>(&mech)) {
    if (sas->noise.is_gaussian()) return std::nullopt;
    const double scalar = epsilon_of(sas->noise.with_mu(0.0), sens.coordinate, cfg).epsilon;
    return vector_epsilon_bound(scalar, dimension);
  }
  if (const auto* lap = std::get_if<LaplaceMechanism>(&mech)) {
    return laplace_epsilon(lap->b, sens.l1);
  }
  return std::nullopt;
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_MECHANISMS_HPP_
