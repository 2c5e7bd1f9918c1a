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

#ifndef FPTSUB_STREAMING_HPP_
#define FPTSUB_STREAMING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fptsub/exactopt.hpp"
#include "fptsub/matroids.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

// Stream layout for n arrivals: a warm-up prefix of ⌈εn⌉ elements, then r
// selection windows of ⌈εn/r⌉ elements each, then the filtering tail.
struct StreamPlan {
  int n = 0;
  int r = 0;
  double epsilon = 0.0;
  int warmup = 0;
  int window = 0;

  // Throws std::invalid_argument unless ε ∈ (0, 1/2), r >= 1 and the tail is
  // nonempty.
  static StreamPlan make(int n, int r, double epsilon);

  int window_begin(int step) const { return warmup + (step - 1) * window; }
  int tail_begin() const { return warmup + r * window; }
};

// ⌈ln(1/ε)/ε⌉, the number of top singletons kept.
int top_singleton_count(double epsilon);

// r·ln(r/ε)·|I|/ε; H may hold at most this many elements before the tail
// scan stops.
double streaming_filter_cap(double epsilon, int r);

struct ChainStep {
  int step = 0;        // 1-based
  Element selected = -1;
  double marginal = 0.0;  // f({s_i} | S_{i-1})
};

struct StreamingOptions {
  // Every oracle query issued while streaming must touch only buffered
  // elements plus the arriving one; violations throw std::logic_error.
  bool enforce_buffer_discipline = false;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

struct StreamingOutcome {
  Subset solution;
  double value = 0.0;
  Subset top_singletons;  // T
  Subset greedy;          // S_r
  Subset filtered;        // H
  double w = 0.0;
  std::vector<ChainStep> chain;
  bool break_triggered = false;
  bool loop_selector = false;  // {s_1} was dependent; see run_greedy_filtering
  std::size_t peak_buffer_elements = 0;
  std::size_t peak_filtered = 0;
  int grid_size = 0;
  double filter_cap = 0.0;
  std::uint64_t search_visited = 0;
  QueryLedger ledger;
};

// Random-order semi-streaming run over the arrival order `permutation`
// (a bijection of 0..n-1). `r` is the rank of `m`.
//
// T holds the top ⌈ln(1/ε)/ε⌉ singletons seen so far (earliest arrival wins
// ties) and is maintained until the stream ends, also after the tail scan
// has stopped. w is r/ε times the best warm-up singleton. Window 1 picks
// s_1 by singleton value alone; window i >= 2 picks the feasible element of
// V_i ∪ {s_1} with the largest f(e | S_{i-1}), s_1 scoring exactly 0 and
// winning ties as the earliest arrival. If {s_1} is a loop the chain still
// records it and `loop_selector` is set; steps with no feasible candidate
// reuse s_1 with marginal 0. The tail admits e into H when, for some step i,
// S_{i-1} + e is independent and ⌊f(e|S_{i-1})⌋_I > ⌊f(s_i|S_{i-1})⌋_I; when
// w = 0 the rounded comparison becomes f(e|S_{i-1}) > 0. The scan stops once
// |H| exceeds the cap. The answer is the best independent subset of
// T ∪ S_r ∪ H.
StreamingOutcome run_greedy_filtering(const SetFunction& f, const Matroid& m, int r,
                                      std::span<const Element> permutation, double epsilon,
                                      const StreamingOptions& options = {});

}  // namespace fptsub

#endif  // FPTSUB_STREAMING_HPP_
