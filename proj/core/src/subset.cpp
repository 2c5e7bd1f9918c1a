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

#include "fptsub/subset.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace fptsub {

Subset make_subset(std::vector<Element> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool is_normalized(std::span<const Element> ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) return false;
  }
  return true;
}

bool contains(std::span<const Element> set, Element e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool is_subset_of(std::span<const Element> inner, std::span<const Element> outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool is_disjoint(std::span<const Element> a, std::span<const Element> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Subset set_union(std::span<const Element> a, std::span<const Element> b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_difference(std::span<const Element> a, std::span<const Element> b) {
  Subset out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_intersection(std::span<const Element> a, std::span<const Element> b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset with_element(std::span<const Element> a, Element e) {
  Subset out(a.begin(), a.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

Subset without_element(std::span<const Element> a, Element e) {
  Subset out;
  out.reserve(a.size());
  for (Element x : a) {
    if (x != e) out.push_back(x);
  }
  return out;
}

Subset subset_from_mask(std::span<const Element> elements, std::uint64_t mask) {
  Subset out;
  for (std::size_t i = 0; i < elements.size() && mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(elements[i]);
  }
  return out;
}

std::string to_string(std::span<const Element> ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) os << ", ";
    os << ids[i];
  }
  os << '}';
  return os.str();
}

}  // namespace fptsub
