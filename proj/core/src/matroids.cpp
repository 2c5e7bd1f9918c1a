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

#include "fptsub/matroids.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fptsub {
namespace {

std::size_t mask_of(std::span<const Element> subset) {
  std::size_t mask = 0;
  for (Element e : subset) mask |= std::size_t{1} << e;
  return mask;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

UniformMatroid::UniformMatroid(int n, int rank) : Matroid(GroundSet(n)), rank_(rank) {
  if (rank < 0) throw std::invalid_argument("uniform matroid: negative rank");
}

PartitionMatroid::PartitionMatroid(int n, std::vector<PartitionBlock> blocks)
    : Matroid(GroundSet(n)), blocks_(std::move(blocks)), block_of_(static_cast<std::size_t>(n), -1) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].capacity < 0) throw std::invalid_argument("partition matroid: negative capacity");
    for (Element e : blocks_[b].elements) {
      if (e < 0 || e >= n) throw std::out_of_range("partition matroid: element outside [0, n)");
      if (block_of_[static_cast<std::size_t>(e)] != -1) {
        throw std::invalid_argument("partition matroid: element " + std::to_string(e) +
                                    " appears in two blocks");
      }
      block_of_[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < n; ++e) {
    if (block_of_[static_cast<std::size_t>(e)] == -1) {
      throw std::invalid_argument("partition matroid: element " + std::to_string(e) +
                                  " is in no block");
    }
  }
}

bool PartitionMatroid::independent(std::span<const Element> subset) const {
  std::vector<int> used(blocks_.size(), 0);
  for (Element e : subset) {
    const auto b = static_cast<std::size_t>(block_of_[static_cast<std::size_t>(e)]);
    if (++used[b] > blocks_[b].capacity) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
    : Matroid(GroundSet(static_cast<int>(edges.size()))),
      vertices_(vertices),
      edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
      throw std::out_of_range("graphic matroid: edge endpoint outside [0, vertices)");
    }
  }
}

bool GraphicMatroid::independent(std::span<const Element> subset) const {
  std::vector<int> parent(static_cast<std::size_t>(vertices_));
  std::iota(parent.begin(), parent.end(), 0);
  for (Element e : subset) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
    const int ru = find_root(parent, u);
    const int rv = find_root(parent, v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

TableMatroid::TableMatroid(int n, const std::vector<Subset>& independent_sets)
    : Matroid(GroundSet(n)) {
  if (n > kMaxElements) throw std::invalid_argument("table matroid: n exceeds 20");
  member_.assign(std::size_t{1} << n, 0);
  for (const Subset& s : independent_sets) {
    ground().check(s);
    member_[mask_of(s)] = 1;
  }
}

bool TableMatroid::independent(std::span<const Element> subset) const {
  return member_[mask_of(subset)] != 0;
}

std::vector<Subset> TableMatroid::independent_sets() const {
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < member_.size(); ++mask) {
    if (member_[mask]) out.push_back(subset_from_mask(ground().elements(), mask));
  }
  return out;
}

RestrictionMatroid::RestrictionMatroid(const Matroid& base, Subset kept)
    : Matroid(GroundSet(base.ground().universe(), std::move(kept))), base_(&base) {
  base.ground().check(ground().elements());
}

ContractionMatroid::ContractionMatroid(const Matroid& base, Subset contracted)
    : Matroid(GroundSet(base.ground().universe(),
                        set_difference(base.ground().elements(), contracted))),
      base_(&base),
      contracted_(std::move(contracted)) {
  base.ground().check(contracted_);
  for (Element e : contracted_) {
    basis_.push_back(e);
    if (!base.independent(basis_)) basis_.pop_back();
  }
}

bool ContractionMatroid::independent(std::span<const Element> subset) const {
  return base_->independent(set_union(basis_, subset));
}

RestrictionMatroid restrict_to(const Matroid& m, Subset kept) {
  return RestrictionMatroid(m, std::move(kept));
}

ContractionMatroid contract(const Matroid& m, Subset contracted) {
  return ContractionMatroid(m, std::move(contracted));
}

bool MembershipOracle::independent(std::span<const Element> subset) const {
  m_->ground().check(subset);
  ++ledger_->membership_queries;
  return m_->independent(subset);
}

bool MembershipOracle::can_add(std::span<const Element> base, Element e) const {
  return independent(with_element(base, e));
}

int rank(const MembershipOracle& m, std::span<const Element> subset) {
  Subset kept;
  for (Element e : subset) {
    if (m.can_add(kept, e)) kept.push_back(e);
  }
  return static_cast<int>(kept.size());
}

int rank(const Matroid& m, std::span<const Element> subset) {
  QueryLedger scratch;
  return rank(MembershipOracle(m, scratch), subset);
}

int rank(const Matroid& m) { return rank(m, m.ground().elements()); }

bool is_base(const MembershipOracle& m, std::span<const Element> candidate,
             std::span<const Element> pool) {
  if (!m.independent(candidate)) return false;
  for (Element e : pool) {
    if (contains(candidate, e)) continue;
    if (m.can_add(candidate, e)) return false;
  }
  return true;
}

bool is_base(const Matroid& m, std::span<const Element> candidate) {
  QueryLedger scratch;
  return is_base(MembershipOracle(m, scratch), candidate, m.ground().elements());
}

Subset extend_to_base(const MembershipOracle& m, std::span<const Element> start,
                      std::span<const Element> pool) {
  if (!m.independent(start)) {
    throw std::invalid_argument("extend_to_base: start set " + to_string(start) +
                                " is not independent");
  }
  Subset current(start.begin(), start.end());
  for (Element e : pool) {
    if (contains(current, e)) continue;
    Subset grown = with_element(current, e);
    if (m.independent(grown)) current = std::move(grown);
  }
  return current;
}

Subset extend_to_base(const Matroid& m, std::span<const Element> start) {
  QueryLedger scratch;
  return extend_to_base(MembershipOracle(m, scratch), start, m.ground().elements());
}

}  // namespace fptsub
