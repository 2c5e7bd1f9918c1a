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

#ifndef FPTSUB_MATROID_CHECKS_HPP_
#define FPTSUB_MATROID_CHECKS_HPP_

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fptsub/matroids.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// Brute-force verification utilities. All of them enumerate, so they are
// meant for small ground sets.

// ∅ ∈ M, downward closure and the exchange axiom, by full enumeration of
// the subsets of m.ground() (at most `max_elements` elements).
bool check_matroid_axioms(const Matroid& m, int max_elements = 12);
bool check_matroid_axioms(int n, const std::vector<Subset>& family);

// The contraction test straight from the definition: X ⊆ ground ∖ S and
// X ∪ S' ∈ M for every independent S' ⊆ S. Costs 2^|S| membership queries.
bool contraction_member_by_definition(const Matroid& m, std::span<const Element> contracted,
                                      std::span<const Element> candidate);

// For bases B1, B2: a bijection h from B1∖B2 onto B2∖B1 such that
// (B1 - e) + h(e) is a base for every e. Searched by backtracking over the
// exchange-feasibility bipartite graph; nullopt if none exists.
std::optional<std::map<Element, Element>> find_exchange_bijection(const Matroid& m,
                                                                  std::span<const Element> b1,
                                                                  std::span<const Element> b2);

struct ExchangePartition {
  Subset x2;
  Subset y2;
};

// For bases B1 = X1 ⊔ Y1 and B2: a split B2 = X2 ⊔ Y2 with X1 ∪ Y2 and
// X2 ∪ Y1 both bases, found by enumerating the subsets of B2.
std::optional<ExchangePartition> find_exchange_partition(const Matroid& m,
                                                         std::span<const Element> b1,
                                                         std::span<const Element> x1,
                                                         std::span<const Element> b2);

}  // namespace fptsub

#endif  // FPTSUB_MATROID_CHECKS_HPP_
