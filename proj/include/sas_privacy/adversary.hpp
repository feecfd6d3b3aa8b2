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

// What an epsilon-DP release lets an adversary conclude.
//
// A test between neighboring datasets with false-positive rate p and
// false-negative rate q must satisfy p + e^eps q >= 1 and e^eps p + q >= 1,
// hence p + q >= 2 / (1 + e^eps).
//
// The density ratio of the two outcomes is bounded by e^eps, so by Bayes'
// rule a prior belief pi moves to at most
//   pi e^eps / (pi e^eps + 1 - pi)
// and to at least the same expression with -eps.

#ifndef SAS_PRIVACY_ADVERSARY_HPP_
#define SAS_PRIVACY_ADVERSARY_HPP_

#include <cmath>

#include "sas_privacy/error.hpp"

namespace sas_privacy {

struct TestBounds {
  double epsilon = 0.0;
  // Lower bound on p + q.
  double min_error_sum = 1.0;
  // Corner of the feasible (p, q) region where both constraints are tight.
  double corner_p = 0.5;
  double corner_q = 0.5;

  // True when (p, q) meets p + e^eps q >= 1 and e^eps p + q >= 1.
  bool admits(double p, double q, double slack = 0.0) const {
    const double r = std::exp(epsilon);
    return p + r * q >= 1.0 - slack && r * p + q >= 1.0 - slack;
  }
};

struct PosteriorBounds {
  double lo = 0.0;
  double hi = 0.0;
};

inline TestBounds tradeoff_bound(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
  TestBounds out;
  out.epsilon = epsilon;
  const double corner = 1.0 / (1.0 + std::exp(epsilon));
  out.corner_p = corner;
  out.corner_q = corner;
  out.min_error_sum = 2.0 * corner;
  return out;
}

inline PosteriorBounds posterior_bounds(double prior, double epsilon) {
  if (!(prior > 0.0 && prior < 1.0)) throw DomainError("prior must lie in (0, 1)");
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
  const auto update = [prior](double log_ratio) {
    // prior r / (prior r + 1 - prior) with r = e^log_ratio, as a logistic.
    const double logit = std::log(prior) - std::log1p(-prior) + log_ratio;
    return 1.0 / (1.0 + std::exp(-logit));
  };
  if (epsilon == 0.0) return {prior, prior};
  return {update(-epsilon), update(epsilon)};
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_ADVERSARY_HPP_
