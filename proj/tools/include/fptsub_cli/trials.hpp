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

#ifndef FPTSUB_CLI_TRIALS_HPP_
#define FPTSUB_CLI_TRIALS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fptsub/exactopt.hpp"
#include "fptsub/instances.hpp"
#include "fptsub/multilinear.hpp"
#include "fptsub_cli/records.hpp"

namespace fptsub::cli {

// Invalid algorithm parameters; the message names the offending flag.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TrialPlan {
  std::string algorithm;  // streaming | cgf | recursive | oracle
  std::optional<double> epsilon;
  std::optional<double> alpha;
  std::uint64_t seed = 0;
  int trials = 1;
  bool with_optimum = false;
  bool timing = false;
  int exact_support_cap = kDefaultExactSupportCap;
  int mc_samples = 0;
  std::uint64_t search_budget = kDefaultSearchBudget;
  int max_filtered_enumeration = 16;
};

// Throws ParameterError unless the plan is valid for an instance with
// `n` elements and matroid rank `r`.
void validate(const TrialPlan& plan, int n, int r);

struct TrialFailure {
  int trial = 0;
  std::uint64_t seed = 0;
  bool budget = false;  // budget or support-cap exhaustion
  std::string message;
};

struct Batch {
  std::vector<TrialRecord> records;  // successful trials, by trial index
  std::vector<TrialFailure> failures;
};

// Trial k uses seed plan.seed + k. Trials are spread over `workers` threads
// and collected by index, so the result does not depend on `workers`.
Batch run_trials(const LoadedInstance& instance, const std::string& instance_id,
                 const TrialPlan& plan, int workers);

// ½ - 8·sqrt(2ε + 2r/n).
double streaming_guarantee(double epsilon, int r, int n);

// Number of workers from FPTSUB_WORKERS (default 1, at least 1).
int workers_from_env();

}  // namespace fptsub::cli

#endif  // FPTSUB_CLI_TRIALS_HPP_
