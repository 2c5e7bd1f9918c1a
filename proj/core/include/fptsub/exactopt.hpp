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

#ifndef FPTSUB_EXACTOPT_HPP_
#define FPTSUB_EXACTOPT_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>

#include "fptsub/matroids.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct OptResult {
  Subset set;    // lexicographically smallest maximizer
  double value = 0.0;
  std::uint64_t visited = 0;  // independent sets evaluated
};

// Exact argmax of f over the independent subsets of `pool`. Depth-first over
// increasing id sequences, pruning dependent prefixes and not extending sets
// of size rank(pool). The traversal visits sets in lexicographic order, so
// keeping the first strict improvement yields the lexicographically smallest
// maximizer. Throws BudgetExceeded when more than `budget` sets would be
// visited.
OptResult best_feasible_subset(const ValueOracle& f, const MembershipOracle& m,
                               std::span<const Element> pool,
                               std::uint64_t budget = kDefaultSearchBudget);

// O = argmax over all independent sets of the ground set.
OptResult exact_opt(const ValueOracle& f, const MembershipOracle& m,
                    std::uint64_t budget = kDefaultSearchBudget);

// min(1, alg / opt), with 0/0 defined as 1. Throws std::logic_error if
// alg > opt + 1e-9 (the exact optimum was beaten) and std::invalid_argument
// for negative opt.
double ratio(double alg_value, double opt_value);

}  // namespace fptsub

#endif  // FPTSUB_EXACTOPT_HPP_
