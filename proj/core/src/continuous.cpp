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

#include "fptsub/continuous.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace fptsub {
namespace {

std::size_t fractional_support(const FractionalPoint& x, Element skip) {
  std::size_t count = 0;
  for (Element e : x.support()) {
    if (e != skip && x.units(e) < x.resolution()) ++count;
  }
  return count;
}

// Chooses exact enumeration or the Monte Carlo fallback per evaluation.
class Evaluator {
 public:
  Evaluator(const ValueOracle& f, const CgfConfig& config, CgfOutcome& out)
      : f_(f), config_(config), out_(out), mc_rng_(derive_seed(config.seed, 1)) {}

  double value(const FractionalPoint& x) {
    note_support(x);
    if (exact_ok(x, -1)) return multilinear_value(f_, x, config_.exact_support_cap);
    out_.used_monte_carlo = true;
    return multilinear_mc(f_, x, config_.mc_samples, mc_rng_).mean;
  }

  double marginal(Element e, const FractionalPoint& x) {
    note_support(x);
    if (exact_ok(x, e)) return multilinear_marginal(f_, e, x, config_.exact_support_cap);
    out_.used_monte_carlo = true;
    return multilinear_marginal_mc(f_, e, x, config_.mc_samples, mc_rng_).mean;
  }

 private:
  bool exact_ok(const FractionalPoint& x, Element skip) const {
    if (static_cast<int>(fractional_support(x, skip)) <= config_.exact_support_cap) return true;
    if (config_.mc_samples <= 0) {
      throw SupportCapExceeded("cgf: fractional point needs more than 2^" +
                               std::to_string(config_.exact_support_cap) +
                               " terms and the Monte Carlo fallback is off");
    }
    return false;
  }

  void note_support(const FractionalPoint& x) {
    out_.max_support = std::max(out_.max_support, x.support_size());
  }

  const ValueOracle& f_;
  const CgfConfig& config_;
  CgfOutcome& out_;
  Rng mc_rng_;
};

}  // namespace

double offline_filter_cap(double epsilon, int r) {
  return r * std::log(r / (epsilon * epsilon)) * offline_grid_size(epsilon, r) /
         std::pow(epsilon, 4);
}

FractionalPoint epoch_point(const CgfOutcome& out, int epoch, int resolution) {
  FractionalPoint x(resolution);
  for (int t = 0; t < epoch; ++t) x.add_all(out.epoch_sets[static_cast<std::size_t>(t)]);
  return x;
}

FractionalPoint record_point(const CgfOutcome& out, const SelectorRecord& record, int resolution) {
  FractionalPoint y = epoch_point(out, record.epoch - 1, resolution);
  // Each epoch adds at most one step per element, so this stays within [0, 1].
  y.add_all(record.prefix);
  return y;
}

std::vector<double> selector_thresholds(const std::vector<SelectorRecord>& records,
                                        const RoundingGrid& grid) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const SelectorRecord& rec : records) out.push_back(grid.floor(rec.delta_marginal));
  return out;
}

CgfOutcome run_cgf(const SetFunction& f, const Matroid& m, int r, const CgfConfig& config) {
  if (config.resolution < 1) throw std::invalid_argument("cgf: 1/epsilon must be a positive integer");
  if (config.guarantee_mode && !(config.epsilon() < 0.25)) {
    throw std::invalid_argument("cgf: guarantee mode needs epsilon < 1/4");
  }
  if (config.exact_support_cap < 0 || config.mc_samples < 0) {
    throw std::invalid_argument("cgf: caps must be nonnegative");
  }
  if (r < 0) throw std::invalid_argument("cgf: negative rank");

  CgfOutcome out;
  out.x_final = FractionalPoint(config.resolution);
  if (r == 0) return out;

  const ValueOracle fo(f, out.ledger);
  const MembershipOracle mo(m, out.ledger);
  Evaluator eval(fo, config, out);
  const double epsilon = config.epsilon();
  const int epochs = config.resolution;
  const auto ground = f.ground().elements();
  if (m.ground().elements().size() != ground.size() ||
      !is_subset_of(ground, m.ground().elements())) {
    throw std::invalid_argument("cgf: function and matroid ground sets differ");
  }

  // Phase 1.
  for (Element e : ground) out.v = std::max(out.v, fo.value(Subset{e}));

  // Phase 2.
  Rng sampler(config.seed);
  const double rate = epsilon * epsilon * epsilon / r;
  FractionalPoint x(config.resolution);
  for (int t = 1; t <= epochs; ++t) {
    Subset current;
    for (int i = 1; i <= r; ++i) {
      SelectorRecord rec;
      rec.epoch = t;
      rec.step = i;
      rec.prefix = current;
      FractionalPoint y = x;
      y.add_all(current);

      Subset sampled;
      for (Element e : ground) {
        if (sampler.bernoulli(rate)) sampled.push_back(e);
      }
      std::optional<Element> best;
      double best_gain = 0.0;
      for (Element e : sampled) {
        if (!mo.can_add(current, e)) continue;
        const double gain = eval.marginal(e, y);
        if (!best || gain > best_gain) {
          best = e;
          best_gain = gain;
        }
      }
      if (best && best_gain >= 0.0) {
        rec.selected = *best;
        rec.selected_marginal = best_gain;
        rec.dummy = contains(current, *best);
        rec.delta_marginal = rec.dummy ? 0.0 : best_gain;
        current = with_element(current, *best);
      }
      out.records.push_back(std::move(rec));
    }
    x.add_all(current);
    out.selected = set_union(out.selected, current);
    out.epoch_sets.push_back(std::move(current));
  }
  out.x_final = x;

  // Phase 3.
  out.grid_size = offline_grid_size(epsilon, r);
  out.filter_cap = offline_filter_cap(epsilon, r);
  std::optional<RoundingGrid> grid;
  if (out.v > 0.0) {
    grid.emplace(make_offline_grid(epsilon, out.v, r));
    const std::vector<double> theta = selector_thresholds(out.records, *grid);
    for (std::size_t k = 0; k < theta.size(); ++k) out.records[k].threshold = theta[k];
  }
  std::vector<FractionalPoint> points;
  points.reserve(out.records.size());
  for (const SelectorRecord& rec : out.records) {
    points.push_back(record_point(out, rec, config.resolution));
  }
  for (Element j : ground) {
    for (std::size_t k = 0; k < out.records.size(); ++k) {
      const SelectorRecord& rec = out.records[k];
      if (!mo.can_add(rec.prefix, j)) continue;
      const double gain = eval.marginal(j, points[k]);
      const bool admitted = grid ? grid->floor(gain) > rec.threshold : gain > 0.0;
      if (admitted) {
        out.filtered.push_back(j);
        break;
      }
    }
    if (static_cast<double>(out.filtered.size()) > out.filter_cap) {
      out.break_triggered = true;
      break;
    }
  }

  out.f_final = eval.value(out.x_final);
  return out;
}

double epoch_telescope_check(const SetFunction& f, const CgfOutcome& out, int resolution,
                             int support_cap) {
  QueryLedger scratch;
  const ValueOracle fo(f, scratch);
  double worst = 0.0;
  double previous = multilinear_value(fo, FractionalPoint(resolution), support_cap);
  for (std::size_t t = 1; t <= out.epoch_sets.size(); ++t) {
    const double current =
        multilinear_value(fo, epoch_point(out, static_cast<int>(t), resolution), support_cap);
    double steps = 0.0;
    for (const SelectorRecord& rec : out.records) {
      if (rec.epoch == static_cast<int>(t)) steps += rec.delta_marginal;
    }
    worst = std::max(worst, std::abs(current - previous - steps));
    previous = current;
  }
  return worst;
}

}  // namespace fptsub
