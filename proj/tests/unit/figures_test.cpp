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

#include <cmath>
#include <map>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "sas_privacy/figures.hpp"

namespace sp = sas_privacy;

namespace {

std::map<std::string, std::size_t> series_sizes(const sp::FigureData& data) {
  std::map<std::string, std::size_t> sizes;
  for (const auto& p : data) ++sizes[p.series];
  return sizes;
}

}  // namespace

TEST(Figures, NamesResolve) {
  for (const auto& name : sp::figure_names()) EXPECT_FALSE(sp::figure(name).empty()) << name;
  EXPECT_THROW(sp::figure("fig99"), sp::DomainError);
}

TEST(Figures, PosteriorBoundsBracketPrior) {
  const auto data = sp::figure("fig2");
  EXPECT_EQ(series_sizes(data).size(), 8u);
  for (const auto& p : data) {
    const bool is_lo = p.series.ends_with(":lo");
    if (is_lo) {
      EXPECT_LE(p.y, p.x);
    } else {
      EXPECT_GE(p.y, p.x);
    }
  }
}

TEST(Figures, GaussianLossIsStraightLine) {
  for (const auto& p : sp::figure("fig4")) {
    if (p.series == "alpha=2") {
      EXPECT_NEAR(p.y, (2.0 * p.x - 1.0) / 4.0, 1e-12);
    }
  }
  EXPECT_EQ(series_sizes(sp::figure("fig4")).size(), 5u);
}

TEST(Figures, EpsilonFallsWithScale) {
  std::map<std::string, double> previous;
  for (const auto& p : sp::figure("fig6")) {
    if (previous.count(p.series)) {
      EXPECT_LT(p.y, previous[p.series]) << p.series;
    }
    previous[p.series] = p.y;
  }
}

TEST(Figures, GammaMinimum) {
  EXPECT_NEAR(sp::gamma_function_argmin(), 1.4616321449683623, 1e-9);
}

TEST(Figures, CauchyAsymptotesHaveFourSeries) {
  const auto sizes = series_sizes(sp::figure("fig7"));
  EXPECT_EQ(sizes.size(), 4u);
  EXPECT_EQ(sizes.at("cauchy"), 61u);
}
