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

#include "fptsub/recursive.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace fptsub {
namespace {

void add_ledger(QueryLedger& into, const QueryLedger& from) {
  into.value_queries += from.value_queries;
  into.membership_queries += from.membership_queries;
}

class Recursion {
 public:
  Recursion(const SetFunction& f, const Matroid& m, const RecursionConfig& config,
            RecursionOutcome& out)
      : f_(f), m_(m), config_(config), out_(out), fo_(f, out.ledger), mo_(m, out.ledger) {}

  void run() {
    const auto [set, value] = visit(1, -1, 0, config_.seed, Subset{}, Subset{});
    out_.solution = set;
    out_.value = value;
  }

 private:
  std::pair<Subset, double> visit(int level, int parent, int branch, std::uint64_t seed,
                                  const Subset& accumulated, const Subset& contracted) {
    if (out_.trace.nodes.size() >= config_.node_budget) {
      throw BudgetExceeded("recursion exceeded its node budget of " +
                           std::to_string(config_.node_budget));
    }
    const auto index = out_.trace.nodes.size();
    out_.trace.nodes.emplace_back();
    {
      RecursionNode& node = out_.trace.nodes.back();
      node.level = level;
      node.parent = parent;
      node.branch = branch;
      node.seed = seed;
      node.contracted = contracted;
    }

    const ShiftedFunction refined_f(f_, contracted);
    const ContractionMatroid refined_m(m_, contracted);
    const int refined_rank =
        rank(MembershipOracle(refined_m, out_.ledger), refined_m.ground().elements());
    CgfConfig cgf;
    cgf.resolution = config_.depth * config_.depth;
    cgf.seed = seed;
    cgf.exact_support_cap = config_.exact_support_cap;
    cgf.mc_samples = config_.mc_samples;
    CgfOutcome sub = run_cgf(refined_f, refined_m, refined_rank, cgf);
    add_ledger(out_.ledger, sub.ledger);

    const Subset next_accumulated = set_union(accumulated, sub.selected);
    {
      RecursionNode& node = out_.trace.nodes[index];
      node.rank = refined_rank;
      node.break_triggered = sub.break_triggered;
      node.selected = sub.selected;
      node.filtered = sub.filtered;
      node.accumulated = next_accumulated;
    }

    if (level == config_.depth) {
      const OptResult leaf = best_feasible_subset(fo_, mo_, set_union(next_accumulated, contracted),
                                                  config_.search_budget);
      RecursionNode& node = out_.trace.nodes[index];
      node.leaf = true;
      node.best_set = leaf.set;
      node.best_value = leaf.value;
      node.leaf_search_size = leaf.visited;
      return {leaf.set, leaf.value};
    }

    if (static_cast<int>(sub.filtered.size()) > config_.max_filtered_enumeration) {
      throw BudgetExceeded("level " + std::to_string(level) + " filtered " +
                           std::to_string(sub.filtered.size()) +
                           " elements, above the enumeration cap of " +
                           std::to_string(config_.max_filtered_enumeration));
    }
    Subset best_set;
    double best_value = fo_.value(best_set);
    const std::vector<Subset> branches = subsets_by_size(sub.filtered);
    out_.trace.nodes[index].children = branches.size();
    for (std::size_t b = 0; b < branches.size(); ++b) {
      auto [set, value] = visit(level + 1, static_cast<int>(index), static_cast<int>(b),
                                derive_seed(seed, b), next_accumulated,
                                set_union(contracted, branches[b]));
      if (value > best_value) {
        best_set = std::move(set);
        best_value = value;
      }
    }
    RecursionNode& node = out_.trace.nodes[index];
    node.best_set = best_set;
    node.best_value = best_value;
    return {best_set, best_value};
  }

  const SetFunction& f_;
  const Matroid& m_;
  const RecursionConfig& config_;
  RecursionOutcome& out_;
  ValueOracle fo_;
  MembershipOracle mo_;
};

}  // namespace

ShiftedFunction::ShiftedFunction(const SetFunction& base, Subset anchor)
    : SetFunction(GroundSet(base.ground().universe(),
                            set_difference(base.ground().elements(), anchor))),
      base_(&base),
      anchor_(std::move(anchor)) {
  base.ground().check(anchor_);
}

double ShiftedFunction::evaluate(std::span<const Element> subset) const {
  return base_->evaluate(set_union(subset, anchor_));
}

ShiftedFunction shifted(const SetFunction& f, Subset anchor) {
  return ShiftedFunction(f, std::move(anchor));
}

std::vector<Subset> subsets_by_size(std::span<const Element> set) {
  std::vector<Subset> out;
  const int n = static_cast<int>(set.size());
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      Subset s;
      for (int i : pick) s.push_back(set[static_cast<std::size_t>(i)]);
      out.push_back(std::move(s));
      int pos = size - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  return out;
}

double recursive_guarantee(int depth) {
  return 1.0 - 1.0 / std::numbers::e - 7.0 / depth;
}

RecursionOutcome run_recursive(const SetFunction& f, const Matroid& m,
                               const RecursionConfig& config) {
  if (config.depth < 1) throw std::invalid_argument("recursive: 1/alpha must be a positive integer");
  if (config.max_filtered_enumeration < 0 || config.max_filtered_enumeration > 30) {
    throw std::invalid_argument("recursive: enumeration cap must lie in [0, 30]");
  }
  if (f.ground().elements().size() != m.ground().elements().size() ||
      !is_subset_of(f.ground().elements(), m.ground().elements())) {
    throw std::invalid_argument("recursive: function and matroid ground sets differ");
  }
  RecursionOutcome out;
  out.trace.depth = config.depth;
  Recursion(f, m, config, out).run();
  return out;
}

}  // namespace fptsub
