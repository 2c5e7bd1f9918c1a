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

#ifndef FPTSUB_ORACLES_HPP_
#define FPTSUB_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fptsub/ground_set.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// Per-run query counters. Never shared between concurrent runs.
struct QueryLedger {
  std::uint64_t value_queries = 0;
  std::uint64_t membership_queries = 0;

  void reset() { *this = QueryLedger{}; }
};

// Nonnegative set function f: 2^ground -> R>=0. Implementations are
// immutable after construction and safe to share across threads.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  const GroundSet& ground() const { return ground_; }
  virtual std::string_view family() const = 0;

  // Unchecked evaluation; `subset` is sorted and inside the ground set.
  virtual double evaluate(std::span<const Element> subset) const = 0;

 protected:
  explicit SetFunction(GroundSet ground) : ground_(std::move(ground)) {}

 private:
  GroundSet ground_;
};

// f(X) = sum of w_e over e in X.
class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  std::string_view family() const override { return "modular"; }
  double evaluate(std::span<const Element> subset) const override;

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// f(X) = total weight of the items covered by X.
class CoverageFunction final : public SetFunction {
 public:
  // covers[e] lists the items covered by element e.
  CoverageFunction(std::vector<double> item_weights, std::vector<std::vector<int>> covers);

  std::string_view family() const override { return "coverage"; }
  double evaluate(std::span<const Element> subset) const override;

  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  std::vector<double> item_weights_;
  std::vector<std::vector<int>> covers_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // element-major, words_ per element
  std::vector<double> byte_sums_;    // weight of each 8-item pattern, 256 per byte
};

struct Arc {
  int from;
  int to;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// f(X) = sum of w(u, v) over arcs with u in X and v outside X.
class DirectedCutFunction final : public SetFunction {
 public:
  DirectedCutFunction(int n, std::vector<Arc> arcs);

  std::string_view family() const override { return "directed-cut"; }
  double evaluate(std::span<const Element> subset) const override;

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::pair<int, double>>> out_;
};

// Explicit table of 2^n values indexed by the subset bitmask.
class TableFunction final : public SetFunction {
 public:
  static constexpr int kMaxElements = 20;

  TableFunction(int n, std::vector<double> values);

  std::string_view family() const override { return "table"; }
  double evaluate(std::span<const Element> subset) const override;

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Tabulates any function whose ground set has at most 20 elements, keyed by
// position in ground().elements().
TableFunction tabulate(const SetFunction& f);

// Counting front end to a SetFunction. Cheap to copy; the ledger must outlive it.
class ValueOracle {
 public:
  ValueOracle(const SetFunction& f, QueryLedger& ledger) : f_(&f), ledger_(&ledger) {}

  const SetFunction& function() const { return *f_; }
  const GroundSet& ground() const { return f_->ground(); }
  QueryLedger& ledger() const { return *ledger_; }

  // f(X); one value query. Throws std::out_of_range on foreign ids.
  double value(std::span<const Element> subset) const;

  // f(X ∪ Y) - f(Y); two value queries.
  double marginal(std::span<const Element> added, std::span<const Element> base) const;

  // f({e} | Y).
  double marginal(Element e, std::span<const Element> base) const;

 private:
  const SetFunction* f_;
  QueryLedger* ledger_;
};

// Exhaustive checks over the subsets of `elements` (at most `max_elements`
// of them; std::invalid_argument beyond). Submodularity uses the local form
// f(e|Y) >= f(e|Y+g), which is equivalent to the Y ⊆ Z form.
bool check_submodular(const SetFunction& f, std::span<const Element> elements,
                      double tolerance = 0.0, int max_elements = 12);
bool check_submodular(const SetFunction& f, double tolerance = 0.0, int max_elements = 12);
bool check_nonneg(const SetFunction& f, std::span<const Element> elements, int max_elements = 12);
bool check_nonneg(const SetFunction& f, int max_elements = 12);

}  // namespace fptsub

#endif  // FPTSUB_ORACLES_HPP_
