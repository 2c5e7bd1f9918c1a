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

#ifndef FPTSUB_SUBSET_HPP_
#define FPTSUB_SUBSET_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fptsub {

using Element = int;

// Subsets of the ground set travel as sorted, duplicate-free id lists.
using Subset = std::vector<Element>;

// Sorts and deduplicates.
Subset make_subset(std::vector<Element> ids);

bool is_normalized(std::span<const Element> ids);

bool contains(std::span<const Element> set, Element e);
bool is_subset_of(std::span<const Element> inner, std::span<const Element> outer);
bool is_disjoint(std::span<const Element> a, std::span<const Element> b);

Subset set_union(std::span<const Element> a, std::span<const Element> b);
Subset set_difference(std::span<const Element> a, std::span<const Element> b);
Subset set_intersection(std::span<const Element> a, std::span<const Element> b);

// a ∪ {e}, kept sorted.
Subset with_element(std::span<const Element> a, Element e);
// a ∖ {e}.
Subset without_element(std::span<const Element> a, Element e);

// Picks the members of `elements` selected by the bits of `mask`.
Subset subset_from_mask(std::span<const Element> elements, std::uint64_t mask);

std::string to_string(std::span<const Element> ids);

}  // namespace fptsub

#endif  // FPTSUB_SUBSET_HPP_
