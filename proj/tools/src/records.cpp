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

#include "fptsub_cli/records.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <tuple>

#include <nlohmann/json.hpp>

#include "fptsub/instances.hpp"

namespace fptsub::cli {
namespace {

using Json = nlohmann::ordered_json;

Json real_or_null(const std::optional<double>& v) {
  return v ? Json(format_real(*v)) : Json(nullptr);
}

const Json& need(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw RecordParseError(std::string("missing field '") + key + "'");
  return *it;
}

double as_real(const Json& j, const char* key) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw RecordParseError(std::string("field '") + key + "' is not a real");
  const std::string& text = j.get_ref<const std::string&>();
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw RecordParseError(std::string("field '") + key + "' is not a real");
  }
  return v;
}

std::optional<double> opt_real(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_real(*it, key);
}

std::uint64_t as_count(const Json& j, const char* key) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw RecordParseError(std::string("field '") + key + "' is not a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

int as_int(const Json& j, const char* key) {
  const std::uint64_t v = as_count(j, key);
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw RecordParseError(std::string("field '") + key + "' is out of range");
  }
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const char* key) {
  if (!j.is_string()) throw RecordParseError(std::string("field '") + key + "' is not a string");
  return j.get<std::string>();
}

std::string cell_real(const std::optional<double>& v, const char* format) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, format, *v);
  return buf;
}

std::string cell_real(double v, const char* format) { return cell_real(std::optional(v), format); }

}  // namespace

std::string to_line(const TrialRecord& rec) {
  Json j;
  j["instance"] = rec.instance;
  j["algorithm"] = rec.algorithm;
  j["trial"] = rec.trial;
  j["seed"] = rec.seed;
  j["epsilon"] = real_or_null(rec.epsilon);
  j["alpha"] = real_or_null(rec.alpha);
  j["r"] = rec.r;
  j["n"] = rec.n;
  j["value"] = format_real(rec.value);
  j["optimum"] = real_or_null(rec.optimum);
  j["ratio"] = real_or_null(rec.ratio);
  j["value_queries"] = rec.value_queries;
  j["membership_queries"] = rec.membership_queries;
  j["peak_H"] = rec.peak_h;
  j["peak_buffer"] = rec.peak_buffer ? Json(*rec.peak_buffer) : Json(nullptr);
  j["break_triggered"] = rec.break_triggered;
  j["guarantee_bound"] = real_or_null(rec.guarantee_bound);
  j["guarantee_vacuous"] = rec.guarantee_vacuous();
  j["solution"] = rec.solution;
  if (rec.wall_ms) j["wall_ms"] = format_real(*rec.wall_ms);
  return j.dump();
}

TrialRecord parse_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error&) {
    throw RecordParseError("not a JSON object");
  }
  if (!j.is_object()) throw RecordParseError("not a JSON object");
  TrialRecord rec;
  rec.instance = as_string(need(j, "instance"), "instance");
  rec.algorithm = as_string(need(j, "algorithm"), "algorithm");
  if (rec.algorithm != "streaming" && rec.algorithm != "cgf" && rec.algorithm != "recursive" &&
      rec.algorithm != "oracle") {
    throw RecordParseError("unknown algorithm '" + rec.algorithm + "'");
  }
  rec.trial = as_int(need(j, "trial"), "trial");
  rec.seed = as_count(need(j, "seed"), "seed");
  rec.epsilon = opt_real(j, "epsilon");
  rec.alpha = opt_real(j, "alpha");
  rec.r = as_int(need(j, "r"), "r");
  rec.n = as_int(need(j, "n"), "n");
  rec.value = as_real(need(j, "value"), "value");
  rec.optimum = opt_real(j, "optimum");
  rec.ratio = opt_real(j, "ratio");
  if (rec.ratio && !(*rec.ratio >= 0.0 && *rec.ratio <= 1.0)) {
    throw RecordParseError("ratio outside [0, 1]");
  }
  rec.value_queries = as_count(need(j, "value_queries"), "value_queries");
  rec.membership_queries = as_count(need(j, "membership_queries"), "membership_queries");
  rec.peak_h = as_count(need(j, "peak_H"), "peak_H");
  if (const auto it = j.find("peak_buffer"); it != j.end() && !it->is_null()) {
    rec.peak_buffer = as_count(*it, "peak_buffer");
  }
  const Json& brk = need(j, "break_triggered");
  if (!brk.is_boolean()) throw RecordParseError("field 'break_triggered' is not a boolean");
  rec.break_triggered = brk.get<bool>();
  rec.guarantee_bound = opt_real(j, "guarantee_bound");
  const Json& sol = need(j, "solution");
  if (!sol.is_array()) throw RecordParseError("field 'solution' is not an array");
  for (const Json& e : sol) {
    if (!e.is_number_integer()) throw RecordParseError("field 'solution' holds a non-integer");
    rec.solution.push_back(e.get<int>());
  }
  rec.wall_ms = opt_real(j, "wall_ms");
  return rec;
}

std::vector<ReportCell> aggregate(const std::vector<TrialRecord>& records) {
  using Key = std::tuple<std::string, std::string, std::optional<double>, std::optional<double>,
                         int, int>;
  std::map<Key, std::size_t> index;
  std::vector<ReportCell> cells;
  std::vector<double> ratio_sums;
  for (const TrialRecord& rec : records) {
    const Key key{rec.instance, rec.algorithm, rec.epsilon, rec.alpha, rec.r, rec.n};
    auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      ReportCell cell;
      cell.instance = rec.instance;
      cell.algorithm = rec.algorithm;
      cell.epsilon = rec.epsilon;
      cell.alpha = rec.alpha;
      cell.r = rec.r;
      cell.n = rec.n;
      cells.push_back(std::move(cell));
      ratio_sums.push_back(0.0);
    }
    ReportCell& cell = cells[it->second];
    ++cell.trials;
    cell.mean_value += rec.value;
    cell.mean_value_queries += static_cast<double>(rec.value_queries);
    cell.mean_membership_queries += static_cast<double>(rec.membership_queries);
    cell.mean_peak_h += static_cast<double>(rec.peak_h);
    cell.break_frequency += rec.break_triggered ? 1.0 : 0.0;
    if (rec.ratio) {
      ++cell.rated;
      ratio_sums[it->second] += *rec.ratio;
      cell.min_ratio = cell.min_ratio ? std::min(*cell.min_ratio, *rec.ratio) : *rec.ratio;
    }
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    ReportCell& cell = cells[k];
    const auto t = static_cast<double>(cell.trials);
    cell.mean_value /= t;
    cell.mean_value_queries /= t;
    cell.mean_membership_queries /= t;
    cell.mean_peak_h /= t;
    cell.break_frequency /= t;
    if (cell.rated > 0) cell.mean_ratio = ratio_sums[k] / static_cast<double>(cell.rated);
  }
  return cells;
}

std::string format_table(const std::vector<ReportCell>& cells) {
  const std::vector<std::string> header = {"instance", "algorithm", "eps",       "alpha",
                                           "r",        "n",         "trials",    "mean_ratio",
                                           "min_ratio", "mean_value", "mean_vq", "mean_mq",
                                           "mean_H",   "break_freq"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const ReportCell& c : cells) {
    rows.push_back({c.instance, c.algorithm, cell_real(c.epsilon, "%g"), cell_real(c.alpha, "%g"),
                    std::to_string(c.r), std::to_string(c.n), std::to_string(c.trials),
                    cell_real(c.mean_ratio, "%.4f"), cell_real(c.min_ratio, "%.4f"),
                    cell_real(c.mean_value, "%.6g"), cell_real(c.mean_value_queries, "%.1f"),
                    cell_real(c.mean_membership_queries, "%.1f"), cell_real(c.mean_peak_h, "%.2f"),
                    cell_real(c.break_frequency, "%.3f")});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) line += "  ";
      // text columns left-aligned, numbers right-aligned
      const std::string pad(width[k] - row[k].size(), ' ');
      line += k < 2 ? row[k] + pad : pad + row[k];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string format_json(const std::vector<ReportCell>& cells) {
  Json doc;
  doc["cells"] = Json::array();
  for (const ReportCell& c : cells) {
    Json j;
    j["instance"] = c.instance;
    j["algorithm"] = c.algorithm;
    j["epsilon"] = real_or_null(c.epsilon);
    j["alpha"] = real_or_null(c.alpha);
    j["r"] = c.r;
    j["n"] = c.n;
    j["trials"] = c.trials;
    j["rated"] = c.rated;
    j["mean_ratio"] = real_or_null(c.mean_ratio);
    j["min_ratio"] = real_or_null(c.min_ratio);
    j["mean_value"] = format_real(c.mean_value);
    j["mean_value_queries"] = format_real(c.mean_value_queries);
    j["mean_membership_queries"] = format_real(c.mean_membership_queries);
    j["mean_peak_H"] = format_real(c.mean_peak_h);
    j["break_frequency"] = format_real(c.break_frequency);
    doc["cells"].push_back(std::move(j));
  }
  return doc.dump(1) + "\n";
}

}  // namespace fptsub::cli
