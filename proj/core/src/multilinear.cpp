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

#include "fptsub/multilinear.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fptsub {
namespace {

// Coordinates strictly inside (0, 1) are enumerated; coordinates at 1 are
// always present in the random set and contribute no branching.
struct SplitSupport {
  Subset certain;
  Subset fractional;
  std::vector<double> probability;
};

SplitSupport split_support(const FractionalPoint& x, Element skip) {
  SplitSupport out;
  for (Element e : x.support()) {
    if (e == skip) continue;
    const int u = x.units(e);
    if (u == x.resolution()) {
      out.certain.push_back(e);
    } else {
      out.fractional.push_back(e);
      out.probability.push_back(static_cast<double>(u) / x.resolution());
    }
  }
  return out;
}

void require_cap(const SplitSupport& s, int cap) {
  if (static_cast<int>(s.fractional.size()) > cap) {
    throw SupportCapExceeded("exact multilinear evaluation needs 2^" +
                             std::to_string(s.fractional.size()) +
                             " terms, above the support cap of " + std::to_string(cap));
  }
}

double mask_probability(const SplitSupport& s, std::uint64_t mask) {
  double p = 1.0;
  for (std::size_t i = 0; i < s.fractional.size(); ++i) {
    p *= ((mask >> i) & 1U) ? s.probability[i] : 1.0 - s.probability[i];
  }
  return p;
}

Subset sample_set(const FractionalPoint& x, Element skip, Rng& rng) {
  Subset out;
  for (Element e : x.support()) {
    if (e == skip) continue;
    if (rng.bernoulli(x.coordinate(e))) out.push_back(e);
  }
  return out;
}

McEstimate summarize(const std::vector<double>& draws) {
  McEstimate est;
  est.samples = static_cast<int>(draws.size());
  double sum = 0.0;
  for (double d : draws) sum += d;
  est.mean = sum / static_cast<double>(draws.size());
  if (draws.size() > 1) {
    double sq = 0.0;
    for (double d : draws) sq += (d - est.mean) * (d - est.mean);
    est.stddev = std::sqrt(sq / static_cast<double>(draws.size() - 1));
  }
  return est;
}

}  // namespace

FractionalPoint::FractionalPoint(int resolution) : resolution_(resolution) {
  if (resolution < 1) throw std::invalid_argument("FractionalPoint: resolution must be >= 1");
}

FractionalPoint FractionalPoint::indicator(std::span<const Element> set, int resolution) {
  FractionalPoint x(resolution);
  x.add_all(set, resolution);
  return x;
}

int FractionalPoint::units(Element e) const {
  const auto it = units_.find(e);
  return it == units_.end() ? 0 : it->second;
}

void FractionalPoint::add(Element e, int count) {
  if (count < 0) throw std::invalid_argument("FractionalPoint::add: negative count");
  if (count == 0) return;
  int& u = units_[e];
  if (u + count > resolution_) {
    throw std::domain_error("FractionalPoint::add: coordinate of element " + std::to_string(e) +
                            " would exceed 1");
  }
  u += count;
}

void FractionalPoint::add_all(std::span<const Element> set, int count) {
  for (Element e : set) add(e, count);
}

Subset FractionalPoint::support() const {
  Subset out;
  out.reserve(units_.size());
  for (const auto& [e, u] : units_) out.push_back(e);
  return out;
}

double McEstimate::stderr_of_mean() const {
  return samples > 0 ? stddev / std::sqrt(static_cast<double>(samples)) : 0.0;
}

double multilinear_value(const ValueOracle& f, const FractionalPoint& x, int support_cap) {
  const SplitSupport s = split_support(x, -1);
  require_cap(s, support_cap);
  const std::uint64_t count = std::uint64_t{1} << s.fractional.size();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Subset drawn = set_union(s.certain, subset_from_mask(s.fractional, mask));
    total += mask_probability(s, mask) * f.value(drawn);
  }
  return total;
}

double multilinear_marginal(const ValueOracle& f, Element e, const FractionalPoint& x,
                            int support_cap) {
  const int headroom = x.resolution() - x.units(e);
  if (headroom <= 0) return 0.0;
  const SplitSupport s = split_support(x, e);
  require_cap(s, support_cap);
  const std::uint64_t count = std::uint64_t{1} << s.fractional.size();
  double expected_gain = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Subset drawn = set_union(s.certain, subset_from_mask(s.fractional, mask));
    expected_gain += mask_probability(s, mask) * f.marginal(e, drawn);
  }
  return x.step() * expected_gain;
}

McEstimate multilinear_mc(const ValueOracle& f, const FractionalPoint& x, int samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("multilinear_mc: samples must be >= 1");
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) draws.push_back(f.value(sample_set(x, -1, rng)));
  return summarize(draws);
}

McEstimate multilinear_marginal_mc(const ValueOracle& f, Element e, const FractionalPoint& x,
                                   int samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("multilinear_marginal_mc: samples must be >= 1");
  if (x.units(e) >= x.resolution()) return McEstimate{0.0, 0.0, samples};
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    draws.push_back(x.step() * f.marginal(e, sample_set(x, e, rng)));
  }
  return summarize(draws);
}

}  // namespace fptsub
