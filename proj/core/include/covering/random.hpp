// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERING_RANDOM_HPP_
#define COVERING_RANDOM_HPP_

// Portable seeded randomness. Every draw is defined bit-for-bit here so that
// experiment output does not depend on the standard library's distributions.

#include <cstdint>
#include <limits>

namespace covering {

// One step of the splitmix64 sequence starting at `state`; advances state.
std::uint64_t SplitMix64(std::uint64_t& state);

// Mixes a base seed with a stream index into an independent 64-bit seed.
std::uint64_t DeriveSeed(std::uint64_t base_seed, std::uint64_t index);

// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform in [0, 1) with 53 random bits.
  double NextDouble();
  // Uniform in [0, bound), bound > 0, unbiased.
  std::uint64_t NextBelow(std::uint64_t bound);

 private:
  std::uint64_t state_[4];
};

}  // namespace covering

#endif  // COVERING_RANDOM_HPP_
