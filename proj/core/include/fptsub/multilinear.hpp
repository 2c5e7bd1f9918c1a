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

#ifndef FPTSUB_MULTILINEAR_HPP_
#define FPTSUB_MULTILINEAR_HPP_

#include <map>
#include <span>
#include <stdexcept>

#include "fptsub/oracles.hpp"
#include "fptsub/rng.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// Sparse point of [0,1]^n whose coordinates are integer multiples of a step
// 1/resolution. Coordinate e is units(e) / resolution.
class FractionalPoint {
 public:
  explicit FractionalPoint(int resolution);

  // The indicator vector 1_S at the given resolution.
  static FractionalPoint indicator(std::span<const Element> set, int resolution);

  int resolution() const { return resolution_; }
  double step() const { return 1.0 / resolution_; }

  int units(Element e) const;
  double coordinate(Element e) const { return static_cast<double>(units(e)) / resolution_; }

  // Adds `count` steps to coordinate e; throws std::domain_error past 1.
  void add(Element e, int count = 1);
  void add_all(std::span<const Element> set, int count = 1);

  Subset support() const;
  std::size_t support_size() const { return units_.size(); }

  friend bool operator==(const FractionalPoint&, const FractionalPoint&) = default;

 private:
  int resolution_;
  std::map<Element, int> units_;  // only nonzero entries
};

class SupportCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultExactSupportCap = 20;

// Exact F(x) by enumerating the subsets of support(x).
double multilinear_value(const ValueOracle& f, const FractionalPoint& x,
                         int support_cap = kDefaultExactSupportCap);

// F(min(x + step·1_e, 1)) - F(x), computed as (clamped increment) times
// E[f(R+e) - f(R)] with R drawn from x restricted to support(x) ∖ {e}.
double multilinear_marginal(const ValueOracle& f, Element e, const FractionalPoint& x,
                            int support_cap = kDefaultExactSupportCap);

struct McEstimate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation of the per-sample values
  int samples = 0;

  double stderr_of_mean() const;
};

// Monte Carlo estimate of F(x): mean of f(R(x)) over independent samples.
McEstimate multilinear_mc(const ValueOracle& f, const FractionalPoint& x, int samples, Rng& rng);

// Monte Carlo counterpart of multilinear_marginal.
McEstimate multilinear_marginal_mc(const ValueOracle& f, Element e, const FractionalPoint& x,
                                   int samples, Rng& rng);

}  // namespace fptsub

#endif  // FPTSUB_MULTILINEAR_HPP_
