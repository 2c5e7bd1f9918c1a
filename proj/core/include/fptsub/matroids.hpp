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

#ifndef FPTSUB_MATROIDS_HPP_
#define FPTSUB_MATROIDS_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fptsub/ground_set.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// Independence oracle over a ground set. Implementations are immutable after
// construction; views hold a reference to their base, which must outlive them.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const GroundSet& ground() const { return ground_; }
  virtual std::string_view family() const = 0;

  // Unchecked membership test; `subset` is sorted and inside the ground set.
  virtual bool independent(std::span<const Element> subset) const = 0;

 protected:
  explicit Matroid(GroundSet ground) : ground_(std::move(ground)) {}

 private:
  GroundSet ground_;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int rank);

  std::string_view family() const override { return "uniform"; }
  bool independent(std::span<const Element> subset) const override {
    return static_cast<int>(subset.size()) <= rank_;
  }

  int rank() const { return rank_; }

 private:
  int rank_;
};

struct PartitionBlock {
  Subset elements;
  int capacity = 0;

  friend bool operator==(const PartitionBlock&, const PartitionBlock&) = default;
};

// Blocks must partition 0..n-1.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(int n, std::vector<PartitionBlock> blocks);

  std::string_view family() const override { return "partition"; }
  bool independent(std::span<const Element> subset) const override;

  const std::vector<PartitionBlock>& blocks() const { return blocks_; }

 private:
  std::vector<PartitionBlock> blocks_;
  std::vector<int> block_of_;
};

// Elements are the edges of an undirected multigraph; a set is independent
// iff its edges form a forest. Self-loops are matroid loops.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);

  std::string_view family() const override { return "graphic"; }
  bool independent(std::span<const Element> subset) const override;

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Explicit family over n <= 20 elements. The family is not required to be a
// matroid; check_matroid_axioms says whether it is.
class TableMatroid final : public Matroid {
 public:
  static constexpr int kMaxElements = 20;

  TableMatroid(int n, const std::vector<Subset>& independent_sets);

  std::string_view family() const override { return "table"; }
  bool independent(std::span<const Element> subset) const override;

  // Members of the family in increasing bitmask order.
  std::vector<Subset> independent_sets() const;

 private:
  std::vector<char> member_;
};

// M_S: the sets of M contained in S.
class RestrictionMatroid final : public Matroid {
 public:
  RestrictionMatroid(const Matroid& base, Subset kept);

  std::string_view family() const override { return "restriction-view"; }
  bool independent(std::span<const Element> subset) const override {
    return base_->independent(subset);
  }

 private:
  const Matroid* base_;
};

// M/S over ground ∖ S. X is independent iff rank(X ∪ S) - rank(S) = |X|,
// evaluated by extending a fixed basis of S: with B_S a maximal independent
// subset of S, rank(X ∪ S) = |B_S| + |X| exactly when B_S ∪ X ∈ M.
class ContractionMatroid final : public Matroid {
 public:
  ContractionMatroid(const Matroid& base, Subset contracted);

  std::string_view family() const override { return "contraction-view"; }
  bool independent(std::span<const Element> subset) const override;

  const Subset& contracted() const { return contracted_; }
  const Subset& contracted_basis() const { return basis_; }

 private:
  const Matroid* base_;
  Subset contracted_;
  Subset basis_;
};

RestrictionMatroid restrict_to(const Matroid& m, Subset kept);
ContractionMatroid contract(const Matroid& m, Subset contracted);

// Counting front end to a Matroid; the ledger must outlive it.
class MembershipOracle {
 public:
  MembershipOracle(const Matroid& m, QueryLedger& ledger) : m_(&m), ledger_(&ledger) {}

  const Matroid& matroid() const { return *m_; }
  const GroundSet& ground() const { return m_->ground(); }
  QueryLedger& ledger() const { return *ledger_; }

  // One membership query. Throws std::out_of_range on foreign ids.
  bool independent(std::span<const Element> subset) const;

  // Whether base ∪ {e} is independent.
  bool can_add(std::span<const Element> base, Element e) const;

 private:
  const Matroid* m_;
  QueryLedger* ledger_;
};

// Size of a maximal independent subset of X, scanning X in id order.
int rank(const MembershipOracle& m, std::span<const Element> subset);
int rank(const Matroid& m, std::span<const Element> subset);
// Rank of the whole ground set.
int rank(const Matroid& m);

// B is independent and no element of `pool` can be added to it.
bool is_base(const MembershipOracle& m, std::span<const Element> candidate,
             std::span<const Element> pool);
bool is_base(const Matroid& m, std::span<const Element> candidate);

// Greedily augments independent X with elements of `pool` in id order.
// Throws std::invalid_argument if X is dependent.
Subset extend_to_base(const MembershipOracle& m, std::span<const Element> start,
                      std::span<const Element> pool);
Subset extend_to_base(const Matroid& m, std::span<const Element> start);

}  // namespace fptsub

#endif  // FPTSUB_MATROIDS_HPP_
