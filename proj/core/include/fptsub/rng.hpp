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

#ifndef FPTSUB_RNG_HPP_
#define FPTSUB_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "fptsub/subset.hpp"

namespace fptsub {

// Seeded generator whose derived draws are fixed bit-for-bit across standard
// libraries: only the engine output is taken from <random>, every conversion
// (unit interval, bounded integer, coin flip) is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Mixes a parent seed with a child index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Fisher-Yates shuffle of 0..n-1.
std::vector<Element> sample_permutation(int n, Rng& rng);

}  // namespace fptsub

#endif  // FPTSUB_RNG_HPP_
