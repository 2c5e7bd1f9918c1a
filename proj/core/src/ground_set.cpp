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

#include "fptsub/ground_set.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fptsub {

GroundSet::GroundSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("GroundSet: negative universe");
  elements_.resize(static_cast<std::size_t>(universe));
  std::iota(elements_.begin(), elements_.end(), 0);
  member_.assign(static_cast<std::size_t>(universe), 1);
}

GroundSet::GroundSet(int universe, Subset elements)
    : universe_(universe), elements_(std::move(elements)) {
  if (universe < 0) throw std::invalid_argument("GroundSet: negative universe");
  if (!is_normalized(elements_)) {
    throw std::invalid_argument("GroundSet: elements must be sorted and unique");
  }
  member_.assign(static_cast<std::size_t>(universe), 0);
  for (Element e : elements_) {
    if (e < 0 || e >= universe) {
      throw std::out_of_range("GroundSet: element " + std::to_string(e) + " outside universe");
    }
    member_[static_cast<std::size_t>(e)] = 1;
  }
}

void GroundSet::check(std::span<const Element> ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!contains(ids[i])) {
      throw std::out_of_range("element " + std::to_string(ids[i]) + " is not in the ground set");
    }
    if (i > 0 && ids[i - 1] >= ids[i]) {
      throw std::invalid_argument("subset ids must be sorted and unique: " + to_string(ids));
    }
  }
}

}  // namespace fptsub
