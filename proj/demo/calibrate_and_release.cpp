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

// Calibrates SaS noise to a privacy budget, checks the achieved budget, and
// releases a noisy mean.

#include <cstdio>
#include <vector>

#include "sas_privacy/mechanisms.hpp"
#include "sas_privacy/privacy_loss.hpp"

int main() {
  namespace sp = sas_privacy;

  const double alpha = 1.5;
  const double epsilon = 1.0;
  const std::vector<double> ages = {34, 51, 27, 45, 62, 38, 29, 57, 41, 48};

  sp::QuerySpec query;
  query.kind = sp::QueryKind::kMean;
  query.range_lo = 18.0;
  query.range_hi = 90.0;
  query.columns = {"age"};

  sp::Dataset data({"age"});
  for (double a : ages) data.add_row({a});

  const auto sens = sp::query_sensitivity(query, data.size());
  const double gamma = sp::calibrate_gamma(alpha, {epsilon, 0.0}, sens.coordinate);
  const sp::StableParams noise(alpha, gamma);

  std::printf("sensitivity     %.6g\n", sens.coordinate);
  std::printf("gamma           %.6g\n", gamma);
  std::printf("achieved eps    %.6g\n", sp::epsilon_of(noise, sens.coordinate).epsilon);

  const auto answer = sp::run_query(data, query);
  const auto released = sp::apply_mechanism(answer, sp::SasMechanism{noise}, {2026});
  std::printf("private mean    %.6g\n", released[0]);
  return 0;
}
