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

#ifndef SAS_PRIVACY_RNG_HPP_
#define SAS_PRIVACY_RNG_HPP_

#include <cstdint>
#include <limits>

namespace sas_privacy {

struct RngSeed {
  std::uint64_t value = 0;
};

// SplitMix64: the output for draw i is a fixed bijective mix of
// seed + (i + 1) * 0x9e3779b97f4a7c15, so a stream is a pure function of the
// seed and the draw index on every platform. split() derives an independent
// child generator for parallel or nested use.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(RngSeed seed) : state_(seed.value) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kIncrement;
    return mix(state_);
  }

  SplitMix64 split() { return SplitMix64(RngSeed{mix((*this)() ^ kSplitSalt)}); }

  // Uniform double in the open interval (0, 1) with 53 random bits.
  double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kIncrement = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kSplitSalt = 0x5851f42d4c957f2dULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_RNG_HPP_
