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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "brute.hpp"
#include "fptsub/exactopt.hpp"
#include "fptsub/rng.hpp"
#include "fptsub/streaming.hpp"
#include "reference.hpp"

using namespace fptsub;
using namespace fptsub::testing;

namespace {

std::unique_ptr<Matroid> build(const MatroidSpec& spec, int n) {
  if (const auto* s = std::get_if<UniformSpec>(&spec)) return std::make_unique<UniformMatroid>(n, s->rank);
  if (const auto* s = std::get_if<PartitionSpec>(&spec)) return std::make_unique<PartitionMatroid>(n, s->blocks);
  const auto& g = std::get<GraphicSpec>(spec);
  return std::make_unique<GraphicMatroid>(g.vertices, g.edges);
}

std::size_t buffer_bound(const StreamingOutcome& out, double eps, int r) {
  return static_cast<std::size_t>(top_singleton_count(eps)) + static_cast<std::size_t>(r) +
         static_cast<std::size_t>(std::floor(out.filter_cap)) + 1;
}

}  // namespace

TEST_CASE("stream plan") {
  const StreamPlan p = StreamPlan::make(10, 2, 0.4);
  CHECK(p.warmup == 4);
  CHECK(p.window == 2);
  CHECK(p.window_begin(1) == 4);
  CHECK(p.window_begin(2) == 6);
  CHECK(p.tail_begin() == 8);
  CHECK_THROWS_AS(StreamPlan::make(10, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(StreamPlan::make(10, 0, 0.2), std::invalid_argument);
  // ⌈0.4·5⌉ + 2·⌈1⌉ = 4 leaves one tail element; n = 4 leaves none
  CHECK_NOTHROW(StreamPlan::make(5, 2, 0.4));
  CHECK_THROWS_AS(StreamPlan::make(4, 2, 0.4), std::invalid_argument);
  CHECK(top_singleton_count(0.2) == 9);
  CHECK(top_singleton_count(0.1) == 24);
}

TEST_CASE("modular objective over a uniform matroid reaches the optimum") {
  Gen gen(51);
  const int n = 40;
  const ModularFunction f(gen.modular(n));
  const UniformMatroid m(n, 3);
  QueryLedger ledger;
  const OptResult opt = exact_opt(ValueOracle(f, ledger), MembershipOracle(m, ledger));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const std::vector<Element> order = sample_permutation(n, rng);
    const StreamingOutcome out = run_greedy_filtering(f, m, 3, order, 0.2);
    CHECK(out.top_singletons.size() == 9);
    CHECK(out.value == opt.value);
    CHECK(out.solution == opt.set);
  }
}

TEST_CASE("zero objective") {
  const int n = 30;
  const ModularFunction f(std::vector<double>(n, 0.0));
  const UniformMatroid m(n, 2);
  Rng rng(3);
  const std::vector<Element> order = sample_permutation(n, rng);
  const StreamingOutcome out = run_greedy_filtering(f, m, 2, order, 0.25);
  CHECK(out.value == 0.0);
  CHECK(out.filtered.empty());
  CHECK(out.solution.empty());
  CHECK(out.w == 0.0);
}

TEST_CASE("trace matches the straight-line transcription") {
  Gen gen(52);
  for (int trial = 0; trial < 150; ++trial) {
    const bool small = trial < 100;
    const int n = small ? 10 : gen.uniform_int(12, 16);
    const int r = small ? 2 : gen.uniform_int(1, 3);
    const double eps = small ? 0.4 : 0.25;
    const TableFunction f(n, gen.submodular_table(n));
    const MatroidSpec spec = small ? MatroidSpec{UniformSpec{2}} : gen.matroid(n, r);
    const auto m = build(spec, n);
    const int rk = rank(*m);
    if (rk < 1) continue;
    Rng rng(static_cast<std::uint64_t>(trial));
    const std::vector<Element> order = sample_permutation(n, rng);
    StreamingOptions options;
    options.enforce_buffer_discipline = true;
    const StreamingOutcome out = run_greedy_filtering(f, *m, rk, order, eps, options);
    const RefStreaming ref = ref_streaming(as_mask_fn(f), as_mask_pred(*m), n, rk, order, eps);
    CAPTURE(trial);
    CHECK(to_mask(out.top_singletons) == ref.top);
    CHECK(to_mask(out.greedy) == ref.greedy);
    CHECK(to_mask(out.filtered) == ref.filtered);
    CHECK(out.w == ref.w);
    REQUIRE(out.chain.size() == ref.selectors.size());
    for (std::size_t i = 0; i < out.chain.size(); ++i) {
      CHECK(out.chain[i].step == static_cast<int>(i) + 1);
      CHECK(out.chain[i].selected == ref.selectors[i]);
      CHECK(out.chain[i].marginal == ref.marginals[i]);
    }
    CHECK(out.break_triggered == ref.broken);
    CHECK(to_mask(out.solution) == ref.solution);
    CHECK(out.value == ref.value);
  }
}

TEST_CASE("feasibility, memory and dominance over T") {
  Gen gen(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.uniform_int(30, 60);
    const CoverageSpec cov = gen.coverage(n, 40, 0.08);
    const CoverageFunction fc(cov.item_weights, cov.covers);
    const DirectedCutFunction fd(n, gen.cut_arcs(n, 0.05));
    const SetFunction& f = trial % 2 == 0 ? static_cast<const SetFunction&>(fc) : fd;
    const MatroidSpec spec = gen.matroid(n, 3);
    const auto m = build(spec, n);
    const int rk = rank(*m);
    const double eps = gen.coin(0.5) ? 0.1 : 0.3;
    Rng rng(static_cast<std::uint64_t>(trial) + 1000);
    const std::vector<Element> order = sample_permutation(n, rng);
    StreamingOptions options;
    options.enforce_buffer_discipline = true;
    const StreamingOutcome out = run_greedy_filtering(f, *m, std::max(rk, 1), order, eps, options);
    CHECK(m->independent(out.solution));
    CHECK(out.value == f.evaluate(out.solution));
    CHECK(out.peak_buffer_elements <= buffer_bound(out, eps, std::max(rk, 1)));
    CHECK(static_cast<int>(out.top_singletons.size()) <= top_singleton_count(eps));
    CHECK(static_cast<double>(out.filtered.size()) <= std::floor(out.filter_cap) + 1);
    double best_single = f.evaluate(Subset{});
    for (Element e : out.top_singletons) {
      if (m->independent(Subset{e})) best_single = std::max(best_single, f.evaluate(Subset{e}));
    }
    CHECK(out.value >= best_single);
    const Subset pool = set_union(set_union(out.top_singletons, out.greedy), out.filtered);
    CHECK(is_subset_of(out.solution, pool));
  }
}

TEST_CASE("a loop in the first window is recorded and the run stays feasible") {
  // elements 4 and 5 are loops and arrive in the first selection window
  const PartitionMatroid m(10, {{{0, 1, 2, 3, 6, 7, 8, 9}, 2}, {{4, 5}, 0}});
  const ModularFunction f({1, 2, 3, 4, 9, 8, 5, 6, 7, 1});
  std::vector<Element> order{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const StreamingOutcome out = run_greedy_filtering(f, m, rank(m), order, 0.4);
  CHECK(out.loop_selector);
  CHECK(out.chain.front().selected == 4);
  CHECK(m.independent(out.solution));
  CHECK_FALSE(contains(out.solution, 4));
}

TEST_CASE("bad inputs") {
  const ModularFunction f(std::vector<double>(10, 1.0));
  const UniformMatroid m(10, 2);
  const UniformMatroid other(11, 2);
  std::vector<Element> order{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK_THROWS_AS(run_greedy_filtering(f, other, 2, order, 0.2), std::invalid_argument);
  std::vector<Element> bad = order;
  bad[3] = 0;
  CHECK_THROWS_AS(run_greedy_filtering(f, m, 2, bad, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(run_greedy_filtering(f, m, 2, order, 0.6), std::invalid_argument);
}
