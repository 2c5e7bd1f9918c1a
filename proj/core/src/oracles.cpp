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

#include "fptsub/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fptsub {
namespace {

void require_nonneg_finite(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be finite and >= 0");
  }
}

std::vector<double> tabulate_over(const SetFunction& f, std::span<const Element> elements,
                                  int max_elements) {
  if (static_cast<int>(elements.size()) > max_elements) {
    throw std::invalid_argument("exhaustive check over " + std::to_string(elements.size()) +
                                " elements exceeds the cap of " + std::to_string(max_elements));
  }
  const std::uint64_t count = std::uint64_t{1} << elements.size();
  std::vector<double> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = f.evaluate(subset_from_mask(elements, mask));
  }
  return values;
}

}  // namespace

ModularFunction::ModularFunction(std::vector<double> weights)
    : SetFunction(GroundSet(static_cast<int>(weights.size()))), weights_(std::move(weights)) {
  for (double w : weights_) require_nonneg_finite(w, "modular weight");
}

double ModularFunction::evaluate(std::span<const Element> subset) const {
  double total = 0.0;
  for (Element e : subset) total += weights_[static_cast<std::size_t>(e)];
  return total;
}

CoverageFunction::CoverageFunction(std::vector<double> item_weights,
                                   std::vector<std::vector<int>> covers)
    : SetFunction(GroundSet(static_cast<int>(covers.size()))),
      item_weights_(std::move(item_weights)),
      covers_(std::move(covers)),
      words_((item_weights_.size() + 63) / 64) {
  for (double w : item_weights_) require_nonneg_finite(w, "coverage item weight");
  bits_.assign(covers_.size() * words_, 0);
  for (std::size_t e = 0; e < covers_.size(); ++e) {
    for (int item : covers_[e]) {
      if (item < 0 || static_cast<std::size_t>(item) >= item_weights_.size()) {
        throw std::out_of_range("coverage: element " + std::to_string(e) +
                                " covers unknown item " + std::to_string(item));
      }
      bits_[e * words_ + static_cast<std::size_t>(item) / 64] |= std::uint64_t{1} << (item % 64);
    }
  }
  byte_sums_.assign(words_ * 8 * 256, 0.0);
  for (std::size_t b = 0; b < words_ * 8; ++b) {
    for (std::size_t pattern = 1; pattern < 256; ++pattern) {
      double sum = 0.0;
      for (std::size_t bit = 0; bit < 8; ++bit) {
        const std::size_t item = b * 8 + bit;
        if ((pattern >> bit & 1) && item < item_weights_.size()) sum += item_weights_[item];
      }
      byte_sums_[b * 256 + pattern] = sum;
    }
  }
}

double CoverageFunction::evaluate(std::span<const Element> subset) const {
  double total = 0.0;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = 0;
    for (Element e : subset) word |= bits_[static_cast<std::size_t>(e) * words_ + w];
    const double* table = &byte_sums_[w * 8 * 256];
    for (; word != 0; word >>= 8, table += 256) total += table[word & 0xff];
  }
  return total;
}

DirectedCutFunction::DirectedCutFunction(int n, std::vector<Arc> arcs)
    : SetFunction(GroundSet(n)), arcs_(std::move(arcs)), out_(static_cast<std::size_t>(n)) {
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw std::out_of_range("directed-cut: arc endpoint outside [0, n)");
    }
    require_nonneg_finite(a.weight, "arc weight");
    out_[static_cast<std::size_t>(a.from)].emplace_back(a.to, a.weight);
  }
}

double DirectedCutFunction::evaluate(std::span<const Element> subset) const {
  double total = 0.0;
  for (Element u : subset) {
    for (const auto& [v, w] : out_[static_cast<std::size_t>(u)]) {
      if (!contains(subset, v)) total += w;
    }
  }
  return total;
}

TableFunction::TableFunction(int n, std::vector<double> values)
    : SetFunction(GroundSet(n)), values_(std::move(values)) {
  if (n > kMaxElements) throw std::invalid_argument("table function: n exceeds 20");
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table function: expected 2^n values");
  }
  for (double v : values_) require_nonneg_finite(v, "table value");
}

double TableFunction::evaluate(std::span<const Element> subset) const {
  std::size_t mask = 0;
  for (Element e : subset) mask |= std::size_t{1} << e;
  return values_[mask];
}

TableFunction tabulate(const SetFunction& f) {
  const auto elements = f.ground().elements();
  return TableFunction(static_cast<int>(elements.size()),
                       tabulate_over(f, elements, TableFunction::kMaxElements));
}

double ValueOracle::value(std::span<const Element> subset) const {
  f_->ground().check(subset);
  ++ledger_->value_queries;
  return f_->evaluate(subset);
}

double ValueOracle::marginal(std::span<const Element> added, std::span<const Element> base) const {
  const Subset joint = set_union(added, base);
  return value(joint) - value(base);
}

double ValueOracle::marginal(Element e, std::span<const Element> base) const {
  const Subset joint = with_element(base, e);
  return value(joint) - value(base);
}

bool check_submodular(const SetFunction& f, std::span<const Element> elements, double tolerance,
                      int max_elements) {
  const std::vector<double> v = tabulate_over(f, elements, max_elements);
  const std::size_t k = elements.size();
  for (std::size_t y = 0; y < v.size(); ++y) {
    for (std::size_t e = 0; e < k; ++e) {
      const std::size_t eb = std::size_t{1} << e;
      if (y & eb) continue;
      const double gain = v[y | eb] - v[y];
      for (std::size_t g = 0; g < k; ++g) {
        const std::size_t gb = std::size_t{1} << g;
        if ((y & gb) || g == e) continue;
        if (gain < v[y | gb | eb] - v[y | gb] - tolerance) return false;
      }
    }
  }
  return true;
}

bool check_submodular(const SetFunction& f, double tolerance, int max_elements) {
  return check_submodular(f, f.ground().elements(), tolerance, max_elements);
}

bool check_nonneg(const SetFunction& f, std::span<const Element> elements, int max_elements) {
  const std::vector<double> v = tabulate_over(f, elements, max_elements);
  return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
}

bool check_nonneg(const SetFunction& f, int max_elements) {
  return check_nonneg(f, f.ground().elements(), max_elements);
}

}  // namespace fptsub
