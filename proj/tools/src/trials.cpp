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

#include "fptsub_cli/trials.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "fptsub/continuous.hpp"
#include "fptsub/recursive.hpp"
#include "fptsub/rng.hpp"
#include "fptsub/streaming.hpp"

namespace fptsub::cli {
namespace {

int reciprocal(double value, const char* flag) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw ParameterError(std::string(flag) + " must lie in (0, 1] with an integer reciprocal");
  }
  const double inverse = 1.0 / value;
  const double nearest = std::round(inverse);
  if (std::abs(inverse - nearest) > 1e-9 * inverse) {
    throw ParameterError(std::string(flag) + " must have an integer reciprocal");
  }
  return static_cast<int>(nearest);
}

struct Slot {
  std::optional<TrialRecord> record;
  std::optional<TrialFailure> failure;
};

class TrialRunner {
 public:
  TrialRunner(const LoadedInstance& instance, const std::string& id, const TrialPlan& plan)
      : inst_(instance), id_(id), plan_(plan), n_(instance.spec.n), r_(rank(*instance.matroid)) {}

  void prepare() {
    validate(plan_, n_, r_);
    if (plan_.with_optimum || plan_.algorithm == "oracle") {
      QueryLedger ledger;
      const ValueOracle fo(*inst_.function, ledger);
      const MembershipOracle mo(*inst_.matroid, ledger);
      opt_ = exact_opt(fo, mo, plan_.search_budget);
      opt_ledger_ = ledger;
    }
  }

  Slot run(int trial) const {
    const std::uint64_t seed = plan_.seed + static_cast<std::uint64_t>(trial);
    Slot slot;
    try {
      const auto start = std::chrono::steady_clock::now();
      TrialRecord rec = execute(seed);
      rec.trial = trial;
      rec.seed = seed;
      if (plan_.timing) {
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                start)
                          .count();
      }
      slot.record = std::move(rec);
    } catch (const BudgetExceeded& e) {
      slot.failure = TrialFailure{trial, seed, true, e.what()};
    } catch (const SupportCapExceeded& e) {
      slot.failure = TrialFailure{trial, seed, true, e.what()};
    } catch (const std::exception& e) {
      slot.failure = TrialFailure{trial, seed, false, e.what()};
    }
    return slot;
  }

 private:
  TrialRecord base() const {
    TrialRecord rec;
    rec.instance = id_;
    rec.algorithm = plan_.algorithm;
    rec.r = r_;
    rec.n = n_;
    if (plan_.algorithm == "streaming" || plan_.algorithm == "cgf") rec.epsilon = plan_.epsilon;
    if (plan_.algorithm == "recursive") rec.alpha = plan_.alpha;
    return rec;
  }

  void finish(TrialRecord& rec) const {
    if (opt_) {
      rec.optimum = opt_->value;
      rec.ratio = ratio(rec.value, opt_->value);
    }
  }

  TrialRecord execute(std::uint64_t seed) const {
    TrialRecord rec = base();
    const SetFunction& f = *inst_.function;
    const Matroid& m = *inst_.matroid;
    if (plan_.algorithm == "oracle") {
      rec.value = opt_->value;
      rec.solution = opt_->set;
      rec.value_queries = opt_ledger_.value_queries;
      rec.membership_queries = opt_ledger_.membership_queries;
      rec.guarantee_bound = 1.0;
    } else if (plan_.algorithm == "streaming") {
      Rng rng(seed);
      const std::vector<Element> order = sample_permutation(n_, rng);
      StreamingOptions options;
      options.search_budget = plan_.search_budget;
      const StreamingOutcome out = run_greedy_filtering(f, m, r_, order, *plan_.epsilon, options);
      rec.value = out.value;
      rec.solution = out.solution;
      rec.value_queries = out.ledger.value_queries;
      rec.membership_queries = out.ledger.membership_queries;
      rec.peak_h = out.peak_filtered;
      rec.peak_buffer = out.peak_buffer_elements;
      rec.break_triggered = out.break_triggered;
      rec.guarantee_bound = streaming_guarantee(*plan_.epsilon, r_, n_);
    } else if (plan_.algorithm == "cgf") {
      CgfConfig config;
      config.resolution = reciprocal(*plan_.epsilon, "--eps");
      config.seed = seed;
      config.exact_support_cap = plan_.exact_support_cap;
      config.mc_samples = plan_.mc_samples;
      const CgfOutcome out = run_cgf(f, m, r_, config);
      QueryLedger ledger;
      const ValueOracle fo(f, ledger);
      const MembershipOracle mo(m, ledger);
      const OptResult best = best_feasible_subset(fo, mo, out.selected, plan_.search_budget);
      rec.value = best.value;
      rec.solution = best.set;
      rec.value_queries = out.ledger.value_queries + ledger.value_queries;
      rec.membership_queries = out.ledger.membership_queries + ledger.membership_queries;
      rec.peak_h = out.filtered.size();
      rec.break_triggered = out.break_triggered;
    } else {
      RecursionConfig config;
      config.depth = reciprocal(*plan_.alpha, "--alpha");
      config.seed = seed;
      config.exact_support_cap = plan_.exact_support_cap;
      config.mc_samples = plan_.mc_samples;
      config.search_budget = plan_.search_budget;
      config.max_filtered_enumeration = plan_.max_filtered_enumeration;
      const RecursionOutcome out = run_recursive(f, m, config);
      rec.value = out.value;
      rec.solution = out.solution;
      rec.value_queries = out.ledger.value_queries;
      rec.membership_queries = out.ledger.membership_queries;
      for (const RecursionNode& node : out.trace.nodes) {
        rec.peak_h = std::max<std::uint64_t>(rec.peak_h, node.filtered.size());
        rec.break_triggered = rec.break_triggered || node.break_triggered;
      }
      rec.guarantee_bound = recursive_guarantee(config.depth);
    }
    finish(rec);
    return rec;
  }

  const LoadedInstance& inst_;
  const std::string& id_;
  const TrialPlan& plan_;
  int n_;
  int r_;
  std::optional<OptResult> opt_;
  QueryLedger opt_ledger_;
};

}  // namespace

void validate(const TrialPlan& plan, int n, int r) {
  if (plan.trials < 1) throw ParameterError("--trials must be >= 1");
  if (plan.exact_support_cap < 0 || plan.exact_support_cap > 30) {
    throw ParameterError("--support-cap must lie in [0, 30]");
  }
  if (plan.mc_samples < 0) throw ParameterError("--mc-samples must be >= 0");
  if (plan.algorithm == "streaming") {
    if (!plan.epsilon) throw ParameterError("--eps is required for streaming");
    const double eps = *plan.epsilon;
    if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("--eps must lie in (0, 1/2) for streaming");
    if (r < 1) throw ParameterError("streaming needs a matroid of rank >= 1");
    try {
      StreamPlan::make(n, r, eps);
    } catch (const std::invalid_argument& e) {
      throw ParameterError(std::string("--eps: ") + e.what());
    }
  } else if (plan.algorithm == "cgf") {
    if (!plan.epsilon) throw ParameterError("--eps is required for cgf");
    reciprocal(*plan.epsilon, "--eps");
  } else if (plan.algorithm == "recursive") {
    if (!plan.alpha) throw ParameterError("--alpha is required for recursive");
    reciprocal(*plan.alpha, "--alpha");
  } else if (plan.algorithm != "oracle") {
    throw ParameterError("--alg must be one of streaming, cgf, recursive, oracle");
  }
}

double streaming_guarantee(double epsilon, int r, int n) {
  return 0.5 - 8.0 * std::sqrt(2.0 * epsilon + 2.0 * r / static_cast<double>(n));
}

int workers_from_env() {
  const char* text = std::getenv("FPTSUB_WORKERS");
  if (text == nullptr || *text == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(text, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 256));
}

Batch run_trials(const LoadedInstance& instance, const std::string& instance_id,
                 const TrialPlan& plan, int workers) {
  TrialRunner runner(instance, instance_id, plan);
  runner.prepare();
  std::vector<Slot> slots(static_cast<std::size_t>(plan.trials));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int k = next++; k < plan.trials; k = next++) slots[static_cast<std::size_t>(k)] = runner.run(k);
  };
  const int threads = std::clamp(workers, 1, plan.trials);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  Batch batch;
  for (Slot& slot : slots) {
    if (slot.record) batch.records.push_back(std::move(*slot.record));
    if (slot.failure) batch.failures.push_back(std::move(*slot.failure));
  }
  return batch;
}

}  // namespace fptsub::cli
