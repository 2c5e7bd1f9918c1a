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

#include <benchmark/benchmark.h>

#include "fptsub/continuous.hpp"
#include "fptsub/exactopt.hpp"
#include "fptsub/instances.hpp"
#include "fptsub/multilinear.hpp"
#include "fptsub/recursive.hpp"
#include "fptsub/rng.hpp"
#include "fptsub/streaming.hpp"

namespace {

using namespace fptsub;

LoadedInstance coverage_instance(int n, int r) {
  InstanceSpec spec;
  spec.n = n;
  spec.function = gen_coverage(n, 64, 0.05, {1.0, 2.0}, 7);
  spec.matroid = gen_uniform(r);
  return instantiate(spec);
}

LoadedInstance table_instance(int n, int r) {
  InstanceSpec spec;
  spec.n = n;
  spec.function = gen_table_function(n, 11);
  spec.matroid = gen_graphic(n, r + 1, 11);
  return instantiate(spec);
}

void BM_MultilinearValue(benchmark::State& state) {
  const int support = static_cast<int>(state.range(0));
  const LoadedInstance inst = coverage_instance(200, 4);
  QueryLedger ledger;
  const ValueOracle f(*inst.function, ledger);
  FractionalPoint x(4);
  for (Element e = 0; e < support; ++e) x.add(e, 1 + e % 3);
  for (auto _ : state) benchmark::DoNotOptimize(multilinear_value(f, x));
  state.counters["queries"] = benchmark::Counter(static_cast<double>(ledger.value_queries),
                                                 benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_MultilinearValue)->DenseRange(4, 16, 4);

void BM_ExactOpt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LoadedInstance inst = coverage_instance(n, 3);
  for (auto _ : state) {
    QueryLedger ledger;
    benchmark::DoNotOptimize(
        exact_opt(ValueOracle(*inst.function, ledger), MembershipOracle(*inst.matroid, ledger)));
  }
}
BENCHMARK(BM_ExactOpt)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Streaming(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LoadedInstance inst = coverage_instance(n, 4);
  Rng rng(3);
  const std::vector<Element> order = sample_permutation(n, rng);
  std::size_t peak = 0;
  for (auto _ : state) {
    const StreamingOutcome out = run_greedy_filtering(*inst.function, *inst.matroid, 4, order, 0.1);
    peak = out.peak_buffer_elements;
    benchmark::DoNotOptimize(out.value);
  }
  state.counters["peak_buffer"] = static_cast<double>(peak);
}
BENCHMARK(BM_Streaming)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Cgf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LoadedInstance inst = table_instance(n, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    CgfConfig config;
    config.resolution = 4;
    config.seed = seed++;
    benchmark::DoNotOptimize(run_cgf(*inst.function, *inst.matroid, rank(*inst.matroid), config).f_final);
  }
}
BENCHMARK(BM_Cgf)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Recursive(benchmark::State& state) {
  const LoadedInstance inst = table_instance(12, 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RecursionConfig config;
    config.depth = 2;
    config.seed = seed++;
    benchmark::DoNotOptimize(run_recursive(*inst.function, *inst.matroid, config).value);
  }
}
BENCHMARK(BM_Recursive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
