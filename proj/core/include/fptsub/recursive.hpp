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

#ifndef FPTSUB_RECURSIVE_HPP_
#define FPTSUB_RECURSIVE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fptsub/continuous.hpp"
#include "fptsub/exactopt.hpp"
#include "fptsub/matroids.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// g(X) = f(X ∪ A) on the ground set of f minus A.
class ShiftedFunction final : public SetFunction {
 public:
  ShiftedFunction(const SetFunction& base, Subset anchor);

  std::string_view family() const override { return "shifted-view"; }
  double evaluate(std::span<const Element> subset) const override;

  const Subset& anchor() const { return anchor_; }

 private:
  const SetFunction* base_;
  Subset anchor_;
};

ShiftedFunction shifted(const SetFunction& f, Subset anchor);

struct RecursionConfig {
  int depth = 2;  // 1/α; every level runs the cgf with ε = α²
  std::uint64_t seed = 0;
  int max_filtered_enumeration = 16;  // cap on |H^(k)| at branching levels
  std::uint64_t node_budget = 1'000'000;
  std::uint64_t search_budget = kDefaultSearchBudget;
  int exact_support_cap = kDefaultExactSupportCap;
  int mc_samples = 0;
};

struct RecursionNode {
  int level = 0;  // k, 1-based
  int parent = -1;
  int branch = 0;  // index among the parent's children
  std::uint64_t seed = 0;
  Subset contracted;      // O_H^acc entering this node
  Subset accumulated;     // S^acc after adding this node's S^(k)
  Subset selected;        // S^(k)
  Subset filtered;        // H^(k)
  int rank = 0;           // rank of M / O_H^acc
  bool break_triggered = false;  // the cgf filter scan hit its cap
  bool leaf = false;
  std::uint64_t children = 0;
  Subset best_set;        // the node's return value
  double best_value = 0.0;
  std::uint64_t leaf_search_size = 0;
};

struct RecursionTrace {
  std::vector<RecursionNode> nodes;  // preorder
  int depth = 0;
};

struct RecursionOutcome {
  Subset solution;
  double value = 0.0;
  RecursionTrace trace;
  QueryLedger ledger;
};

// Depth-1/α recursion over refined instances. A node at level k with
// accumulated sets (S^acc, O_H^acc) runs the cgf on (f shifted by O_H^acc,
// M / O_H^acc), adds S^(k) to S^acc, and at k = 1/α returns the best
// independent subset of S^acc ∪ O_H^acc. Other levels recurse once per subset
// O_H^(k) of H^(k), by increasing size then lexicographically, with
// O_H^acc ∪ O_H^(k), keeping a child's answer only when it strictly beats
// the best so far (starting from ∅). Child b of a node with seed s gets seed
// derive_seed(s, b). Throws BudgetExceeded when |H^(k)| exceeds the
// enumeration cap or the node budget runs out.
RecursionOutcome run_recursive(const SetFunction& f, const Matroid& m,
                               const RecursionConfig& config);

// Subsets of `set` ordered by size, then lexicographically.
std::vector<Subset> subsets_by_size(std::span<const Element> set);

// 1 - 1/e - 7α.
double recursive_guarantee(int depth);

}  // namespace fptsub

#endif  // FPTSUB_RECURSIVE_HPP_
