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

#ifndef FPTSUB_CONTINUOUS_HPP_
#define FPTSUB_CONTINUOUS_HPP_

#include <cstdint>
#include <vector>

#include "fptsub/matroids.hpp"
#include "fptsub/multilinear.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/rounding.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

struct CgfConfig {
  int resolution = 4;  // 1/ε
  std::uint64_t seed = 0;
  // Requires ε < 1/4, the regime with an approximation guarantee.
  bool guarantee_mode = false;
  int exact_support_cap = kDefaultExactSupportCap;
  // Monte Carlo samples per multilinear evaluation once the exact
  // enumeration would exceed the cap; 0 turns the fallback off.
  int mc_samples = 0;

  double epsilon() const { return 1.0 / resolution; }
};

// One (epoch, step) of the fractional greedy phase.
struct SelectorRecord {
  int epoch = 0;  // t, 1-based
  int step = 0;   // i, 1-based
  Subset prefix;  // S^t_{i-1}
  Element selected = -1;  // s^t_i, or -1 when nothing was picked
  // Δ^t_i = 1_{S^t_i} - 1_{S^t_{i-1}} is zero when nothing was picked or the
  // pick was already in the prefix.
  bool dummy = true;
  double selected_marginal = 0.0;  // F(ε·1_{s} | y) when something was picked
  double delta_marginal = 0.0;     // F(ε·Δ | y): equals selected_marginal or 0
  double threshold = 0.0;          // ⌊delta_marginal⌋_I (0 until thresholds are set)
};

struct CgfOutcome {
  Subset selected;  // S = ∪_t S^t_r
  Subset filtered;  // H
  std::vector<Subset> epoch_sets;  // S^t_r for t = 1..1/ε
  FractionalPoint x_final{1};
  double f_final = 0.0;  // F(x_final)
  std::vector<SelectorRecord> records;
  double v = 0.0;
  int grid_size = 0;
  double filter_cap = 0.0;
  bool break_triggered = false;
  bool used_monte_carlo = false;
  std::size_t max_support = 0;  // largest support of any point evaluated
  QueryLedger ledger;
};

// r·ln(r/ε²)·|I|/ε⁴.
double offline_filter_cap(double epsilon, int r);

// x^{t-1} + ε·1_{S^t_{i-1}} for a record, rebuilt from the epoch sets.
FractionalPoint record_point(const CgfOutcome& out, const SelectorRecord& record, int resolution);

// Sum over τ <= t of ε·1_{S^τ_r}.
FractionalPoint epoch_point(const CgfOutcome& out, int epoch, int resolution);

// Fractional greedy with selector-threshold filtering. r is the rank of m
// (r = 0 returns empty S and H at once).
//
// Each of the r steps of every epoch samples the ground set, one
// Bernoulli(ε³/r) draw per element in id order, takes the sampled element e
// with S^t_{i-1} + e independent and largest F(ε·1_e | x^{t-1} + ε·1_{S^t_{i-1}})
// (smallest id on ties), and keeps it iff that marginal is >= 0. Coordinates
// already at 1 gain nothing from a further step. Afterwards j joins H when,
// for some (t, i) in order, S^t_{i-1} + j is independent and its rounded
// marginal beats the rounded selector marginal; when v = 0 the test becomes
// marginal > 0. The scan over j stops once |H| exceeds the cap.
CgfOutcome run_cgf(const SetFunction& f, const Matroid& m, int r, const CgfConfig& config);

// ⌊F(ε·Δ^t_i | ·)⌋_I per record, in record order.
std::vector<double> selector_thresholds(const std::vector<SelectorRecord>& records,
                                        const RoundingGrid& grid);

// max over t of |F(x^t) - F(x^{t-1}) - Σ_i F(ε·Δ^t_i | x^{t-1} + ε·1_{S^t_{i-1}})|,
// re-evaluating F exactly.
double epoch_telescope_check(const SetFunction& f, const CgfOutcome& out, int resolution,
                             int support_cap = kDefaultExactSupportCap);

}  // namespace fptsub

#endif  // FPTSUB_CONTINUOUS_HPP_
