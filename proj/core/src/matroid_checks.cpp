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

#include "fptsub/matroid_checks.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace fptsub {
namespace {

bool backtrack_matching(const std::vector<std::vector<char>>& feasible, std::size_t row,
                        std::vector<char>& used, std::vector<int>& assignment) {
  if (row == feasible.size()) return true;
  for (std::size_t col = 0; col < used.size(); ++col) {
    if (used[col] || !feasible[row][col]) continue;
    used[col] = 1;
    assignment[row] = static_cast<int>(col);
    if (backtrack_matching(feasible, row + 1, used, assignment)) return true;
    used[col] = 0;
  }
  return false;
}

}  // namespace

bool check_matroid_axioms(const Matroid& m, int max_elements) {
  const auto elements = m.ground().elements();
  if (static_cast<int>(elements.size()) > max_elements) {
    throw std::invalid_argument("check_matroid_axioms: ground set of " +
                                std::to_string(elements.size()) + " exceeds the cap of " +
                                std::to_string(max_elements));
  }
  const std::size_t count = std::size_t{1} << elements.size();
  std::vector<char> indep(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    indep[mask] = m.independent(subset_from_mask(elements, mask)) ? 1 : 0;
  }
  if (!indep[0]) return false;
  std::vector<std::size_t> members;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!indep[mask]) continue;
    members.push_back(mask);
    // Downward closure: removing any one element stays independent.
    for (std::size_t rest = mask; rest != 0; rest &= rest - 1) {
      if (!indep[mask & ~(rest & (~rest + 1))]) return false;
    }
  }
  // Exchange for |X| = |Y| + 1 implies the general axiom under downward closure.
  for (std::size_t x : members) {
    for (std::size_t y : members) {
      if (std::popcount(x) != std::popcount(y) + 1) continue;
      bool found = false;
      for (std::size_t diff = x & ~y; diff != 0 && !found; diff &= diff - 1) {
        found = indep[y | (diff & (~diff + 1))] != 0;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool check_matroid_axioms(int n, const std::vector<Subset>& family) {
  return check_matroid_axioms(TableMatroid(n, family), TableMatroid::kMaxElements);
}

bool contraction_member_by_definition(const Matroid& m, std::span<const Element> contracted,
                                      std::span<const Element> candidate) {
  if (!is_disjoint(contracted, candidate)) return false;
  const std::uint64_t count = std::uint64_t{1} << contracted.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Subset part = subset_from_mask(contracted, mask);
    if (!m.independent(part)) continue;
    if (!m.independent(set_union(part, candidate))) return false;
  }
  return true;
}

std::optional<std::map<Element, Element>> find_exchange_bijection(const Matroid& m,
                                                                  std::span<const Element> b1,
                                                                  std::span<const Element> b2) {
  const Subset only1 = set_difference(b1, b2);
  const Subset only2 = set_difference(b2, b1);
  if (only1.size() != only2.size()) return std::nullopt;
  std::vector<std::vector<char>> feasible(only1.size(), std::vector<char>(only2.size(), 0));
  for (std::size_t i = 0; i < only1.size(); ++i) {
    const Subset rest = without_element(b1, only1[i]);
    for (std::size_t j = 0; j < only2.size(); ++j) {
      feasible[i][j] = is_base(m, with_element(rest, only2[j])) ? 1 : 0;
    }
  }
  std::vector<char> used(only2.size(), 0);
  std::vector<int> assignment(only1.size(), -1);
  if (!backtrack_matching(feasible, 0, used, assignment)) return std::nullopt;
  std::map<Element, Element> h;
  for (std::size_t i = 0; i < only1.size(); ++i) {
    h[only1[i]] = only2[static_cast<std::size_t>(assignment[i])];
  }
  return h;
}

std::optional<ExchangePartition> find_exchange_partition(const Matroid& m,
                                                         std::span<const Element> b1,
                                                         std::span<const Element> x1,
                                                         std::span<const Element> b2) {
  const Subset y1 = set_difference(b1, x1);
  const std::uint64_t count = std::uint64_t{1} << b2.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ExchangePartition split;
    split.x2 = subset_from_mask(b2, mask);
    split.y2 = set_difference(b2, split.x2);
    if (!is_disjoint(x1, split.y2) || !is_disjoint(split.x2, y1)) continue;
    if (is_base(m, set_union(x1, split.y2)) && is_base(m, set_union(split.x2, y1))) {
      return split;
    }
  }
  return std::nullopt;
}

}  // namespace fptsub
