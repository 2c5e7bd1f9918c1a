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

#include "fptsub/exactopt.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fptsub {
namespace {

class Search {
 public:
  Search(const ValueOracle& f, const MembershipOracle& m, std::span<const Element> pool,
         std::uint64_t budget)
      : f_(f), m_(m), pool_(pool.begin(), pool.end()), budget_(budget) {}

  OptResult run() {
    m_.ground().check(pool_);
    rank_ = static_cast<std::size_t>(rank(m_, pool_));
    visit();
    return best_;
  }

 private:
  // `current_` is independent; evaluate it, then try every larger id.
  void visit() {
    if (best_.visited == budget_) {
      throw BudgetExceeded("independent-set search exceeded its budget of " +
                           std::to_string(budget_) + " sets");
    }
    ++best_.visited;
    const double v = f_.value(current_);
    if (best_.visited == 1 || v > best_.value) {
      best_.value = v;
      best_.set = current_;
    }
    if (current_.size() == rank_) return;  // bases of the pool have no independent extension
    for (std::size_t i = next_; i < pool_.size(); ++i) {
      current_.push_back(pool_[i]);
      if (m_.independent(current_)) {
        const std::size_t saved = next_;
        next_ = i + 1;
        visit();
        next_ = saved;
      }
      current_.pop_back();
    }
  }

  const ValueOracle& f_;
  const MembershipOracle& m_;
  Subset pool_;
  std::uint64_t budget_;
  Subset current_;
  std::size_t next_ = 0;
  std::size_t rank_ = 0;
  OptResult best_;
};

}  // namespace

OptResult best_feasible_subset(const ValueOracle& f, const MembershipOracle& m,
                               std::span<const Element> pool, std::uint64_t budget) {
  if (!is_normalized(pool)) {
    throw std::invalid_argument("best_feasible_subset: pool must be sorted and unique");
  }
  // ∅ is always visited even when ∅ ∉ M; table families may violate the
  // axioms, but the algorithms only run on matroids.
  return Search(f, m, pool, budget).run();
}

OptResult exact_opt(const ValueOracle& f, const MembershipOracle& m, std::uint64_t budget) {
  return best_feasible_subset(f, m, m.ground().elements(), budget);
}

double ratio(double alg_value, double opt_value) {
  if (opt_value < 0.0) throw std::invalid_argument("ratio: negative optimum");
  if (alg_value > opt_value + 1e-9) {
    throw std::logic_error("ratio: algorithm value " + std::to_string(alg_value) +
                           " exceeds the exact optimum " + std::to_string(opt_value));
  }
  if (opt_value == 0.0) return 1.0;
  return std::min(1.0, alg_value / opt_value);
}

}  // namespace fptsub
