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

#ifndef FPTSUB_CLI_RECORDS_HPP_
#define FPTSUB_CLI_RECORDS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fptsub/subset.hpp"

namespace fptsub::cli {

// One algorithm run on one instance. Serialized as a single JSON object per
// line with a fixed field order; reals are 17-significant-digit strings.
struct TrialRecord {
  std::string instance;
  std::string algorithm;  // streaming | cgf | recursive | oracle
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  std::optional<double> alpha;
  int r = 0;
  int n = 0;
  double value = 0.0;
  std::optional<double> optimum;
  std::optional<double> ratio;
  std::uint64_t value_queries = 0;
  std::uint64_t membership_queries = 0;
  std::uint64_t peak_h = 0;
  std::optional<std::uint64_t> peak_buffer;
  bool break_triggered = false;
  std::optional<double> guarantee_bound;
  Subset solution;
  std::optional<double> wall_ms;

  bool guarantee_vacuous() const { return guarantee_bound && *guarantee_bound <= 0.0; }

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

class RecordParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_line(const TrialRecord& record);
TrialRecord parse_line(const std::string& line);

struct ReportCell {
  std::string instance;
  std::string algorithm;
  std::optional<double> epsilon;
  std::optional<double> alpha;
  int r = 0;
  int n = 0;
  std::size_t trials = 0;
  std::size_t rated = 0;  // trials carrying a ratio
  std::optional<double> mean_ratio;
  std::optional<double> min_ratio;
  double mean_value = 0.0;
  double mean_value_queries = 0.0;
  double mean_membership_queries = 0.0;
  double mean_peak_h = 0.0;
  double break_frequency = 0.0;
};

// Cells keyed by (instance, algorithm, ε, α, r, n), in order of first
// appearance.
std::vector<ReportCell> aggregate(const std::vector<TrialRecord>& records);

std::string format_table(const std::vector<ReportCell>& cells);
std::string format_json(const std::vector<ReportCell>& cells);

}  // namespace fptsub::cli

#endif  // FPTSUB_CLI_RECORDS_HPP_
