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

#ifndef FPTSUB_GROUND_SET_HPP_
#define FPTSUB_GROUND_SET_HPP_

#include <span>
#include <vector>

#include "fptsub/subset.hpp"

namespace fptsub {

// The element ids an oracle answers for. Ids live in [0, universe); views
// (shifted functions, contractions, restrictions) expose a proper subset.
class GroundSet {
 public:
  // The full range 0..universe-1.
  explicit GroundSet(int universe);
  GroundSet(int universe, Subset elements);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::span<const Element> elements() const { return elements_; }

  bool contains(Element e) const {
    return e >= 0 && e < universe_ && member_[static_cast<std::size_t>(e)] != 0;
  }

  // Throws std::out_of_range for ids outside the ground set and
  // std::invalid_argument for unsorted or duplicated ids.
  void check(std::span<const Element> ids) const;

 private:
  int universe_;
  Subset elements_;
  std::vector<char> member_;
};

}  // namespace fptsub

#endif  // FPTSUB_GROUND_SET_HPP_
