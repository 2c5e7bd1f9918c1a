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

#include "fptsub_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fptsub/instances.hpp"
#include "fptsub/rng.hpp"
#include "fptsub_cli/records.hpp"
#include "fptsub_cli/trials.hpp"

namespace fptsub::cli {
namespace {

struct GenFlags {
  std::string fn;
  std::string matroid;
  int n = 0;
  int r = 1;
  std::uint64_t seed = 0;
  std::optional<int> items;
  double density = 0.1;
  double arc_density = 0.2;
  double wmin = 1.0;
  double wmax = 2.0;
  std::optional<int> blocks;
  int capacity = 1;
  std::optional<int> vertices;
  bool degenerate = false;
  std::string name;
  std::string notes;
  std::string out;
};

struct RunFlags {
  std::vector<std::string> instances;
  TrialPlan plan;
  std::string grid;
};

struct ReportFlags {
  std::string path;
  std::string format = "text";
};

void add_plan_options(CLI::App& cmd, TrialPlan& plan) {
  cmd.add_option("--alg", plan.algorithm, "streaming | cgf | recursive | oracle")->required();
  cmd.add_option("--seed", plan.seed, "seed of trial 0; trial k uses seed + k");
  cmd.add_option("--trials", plan.trials, "number of trials");
  cmd.add_flag("--with-opt", plan.with_optimum, "compute the exact optimum and ratios");
  cmd.add_flag("--timing", plan.timing, "add wall_ms to every record");
  cmd.add_option("--support-cap", plan.exact_support_cap,
                 "largest fractional support evaluated exactly");
  cmd.add_option("--mc-samples", plan.mc_samples, "Monte Carlo samples past the support cap");
  cmd.add_option("--budget", plan.search_budget, "exhaustive-search budget");
  cmd.add_option("--enum-cap", plan.max_filtered_enumeration,
                 "largest H enumerated by the recursive algorithm");
}

std::string instance_id(const LoadedInstance& inst, const std::string& path) {
  if (!inst.spec.name.empty()) return inst.spec.name;
  return std::filesystem::path(path).stem().string();
}

InstanceSpec build_spec(const GenFlags& g) {
  if (g.n < 1) throw ParameterError("--n must be >= 1");
  if (!(g.density > 0.0 && g.density <= 1.0)) throw ParameterError("--density must lie in (0, 1]");
  if (!(g.arc_density > 0.0 && g.arc_density <= 1.0)) {
    throw ParameterError("--arc-density must lie in (0, 1]");
  }
  if (!(g.wmin >= 0.0 && g.wmax >= g.wmin)) throw ParameterError("--wmin/--wmax need 0 <= wmin <= wmax");
  if (!g.degenerate && !(g.wmax > 0.0)) throw ParameterError("--wmax must be > 0 without --degenerate");
  const WeightRange weights{g.wmin, g.wmax};
  InstanceSpec spec;
  spec.n = g.n;
  spec.seed = g.seed;
  const std::uint64_t fn_seed = derive_seed(g.seed, 0);
  const std::uint64_t m_seed = derive_seed(g.seed, 1);
  if (g.fn == "coverage") {
    const int items = g.items.value_or(g.n);
    if (items < 1) throw ParameterError("--items must be >= 1");
    spec.function = gen_coverage(g.n, items, g.density, weights, fn_seed, g.degenerate);
  } else if (g.fn == "directed-cut") {
    spec.function = gen_directed_cut(g.n, g.arc_density, weights, fn_seed, g.degenerate);
  } else if (g.fn == "modular") {
    spec.function = gen_modular(g.n, weights, fn_seed, g.degenerate);
  } else if (g.fn == "table") {
    if (g.n > TableFunction::kMaxElements) throw ParameterError("--n must be <= 20 for --fn table");
    spec.function = gen_table_function(g.n, fn_seed);
  } else {
    throw ParameterError("--fn must be one of coverage, directed-cut, modular, table");
  }
  if (g.r < 0 || g.r > g.n) throw ParameterError("--r must lie in [0, n]");
  if (g.matroid == "uniform") {
    spec.matroid = gen_uniform(g.r);
  } else if (g.matroid == "partition") {
    const int blocks = g.blocks.value_or(std::max(1, g.r));
    if (blocks < 1 || blocks > g.n) throw ParameterError("--blocks must lie in [1, n]");
    if (g.capacity < 1) throw ParameterError("--capacity must be >= 1");
    spec.matroid = gen_partition(g.n, blocks, g.capacity, m_seed);
  } else if (g.matroid == "graphic") {
    const int vertices = g.vertices.value_or(g.r + 1);
    if (vertices < 2) throw ParameterError("--vertices must be >= 2");
    spec.matroid = gen_graphic(g.n, vertices, m_seed);
  } else {
    throw ParameterError("--matroid must be one of uniform, partition, graphic");
  }
  spec.name = g.name.empty() ? g.fn + "-" + g.matroid + "-n" + std::to_string(g.n) + "-r" +
                                   std::to_string(g.r) + "-s" + std::to_string(g.seed)
                             : g.name;
  spec.notes = g.notes;
  return spec;
}

int cmd_gen(const GenFlags& g, std::ostream& out, std::ostream& err) {
  InstanceSpec spec;
  try {
    spec = build_spec(g);
    instantiate(spec);
  } catch (const std::invalid_argument& e) {
    err << "gen: " << e.what() << "\n";
    return kBadParameter;
  }
  const std::string path = g.out.empty() ? spec.name + ".json" : g.out;
  try {
    save(spec, path);
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << "\n";
    return kFailure;
  }
  out << spec.name << "\n";
  return kOk;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw ParameterError("--grid: malformed value '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ParameterError("--grid must list at least one value");
  return values;
}

// Runs one plan per (instance, grid value) in order, streaming records to
// `out`. Returns the exit code.
int run_plans(const std::vector<std::string>& paths, const TrialPlan& base,
              const std::vector<std::optional<double>>& grid, std::ostream& out,
              std::ostream& err) {
  const int workers = workers_from_env();
  int status = kOk;
  for (const std::string& path : paths) {
    LoadedInstance inst;
    try {
      inst = load(path);
    } catch (const std::exception& e) {
      err << "run: cannot load " << path << ": " << e.what() << "\n";
      return kFailure;
    }
    const std::string id = instance_id(inst, path);
    for (const std::optional<double>& value : grid) {
      TrialPlan plan = base;
      if (value) {
        if (plan.algorithm == "recursive") {
          plan.alpha = value;
        } else {
          plan.epsilon = value;
        }
      }
      Batch batch;
      try {
        batch = run_trials(inst, id, plan, workers);
      } catch (const ParameterError& e) {
        err << "run: " << e.what() << "\n";
        return kBadParameter;
      } catch (const BudgetExceeded& e) {
        err << "run: " << id << ": exact optimum: " << e.what() << "\n";
        return kBudget;
      } catch (const std::exception& e) {
        err << "run: " << id << ": " << e.what() << "\n";
        return kFailure;
      }
      for (const TrialRecord& rec : batch.records) out << to_line(rec) << "\n";
      for (const TrialFailure& f : batch.failures) {
        err << "run: " << id << ": trial " << f.trial << " (seed " << f.seed << ") failed: "
            << f.message << "\n";
        if (f.budget) {
          if (status == kOk) status = kBudget;
        } else {
          status = kFailure;
        }
      }
    }
  }
  return status;
}

int cmd_report(const ReportFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.format != "text" && flags.format != "json") {
    err << "report: --format must be text or json\n";
    return kBadParameter;
  }
  std::ifstream in(flags.path, std::ios::binary);
  if (!in) {
    err << "report: cannot open " << flags.path << "\n";
    return kFailure;
  }
  std::vector<TrialRecord> records;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse_line(line));
    } catch (const RecordParseError& e) {
      err << "report: line " << number << ": " << e.what() << "\n";
      return kBadRecord;
    }
  }
  const std::vector<ReportCell> cells = aggregate(records);
  out << (flags.format == "json" ? format_json(cells) : format_table(cells));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Submodular maximization under a matroid constraint: experiment harness",
               "fptsub"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--fn", gen.fn, "coverage | directed-cut | modular | table")->required();
  gen_cmd->add_option("--matroid", gen.matroid, "uniform | partition | graphic")->required();
  gen_cmd->add_option("--n", gen.n, "ground set size")->required();
  gen_cmd->add_option("--r", gen.r, "uniform rank; default block count and vertices - 1");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--items", gen.items, "coverage items (default n)");
  gen_cmd->add_option("--density", gen.density, "coverage incidence probability");
  gen_cmd->add_option("--arc-density", gen.arc_density, "directed-cut arc probability");
  gen_cmd->add_option("--wmin", gen.wmin, "smallest weight");
  gen_cmd->add_option("--wmax", gen.wmax, "largest weight");
  gen_cmd->add_option("--blocks", gen.blocks, "partition blocks (default r)");
  gen_cmd->add_option("--capacity", gen.capacity, "largest partition block capacity");
  gen_cmd->add_option("--vertices", gen.vertices, "graphic matroid vertices (default r + 1)");
  gen_cmd->add_flag("--degenerate", gen.degenerate, "allow functions that vanish everywhere");
  gen_cmd->add_option("--name", gen.name, "instance id");
  gen_cmd->add_option("--notes", gen.notes, "free-form metadata");
  gen_cmd->add_option("--out", gen.out, "output path (default <id>.json)");

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "run an algorithm on an instance");
  run_cmd->add_option("instance", run.instances, "instance file")->required()->expected(1);
  add_plan_options(*run_cmd, run.plan);
  run_cmd->add_option("--eps", run.plan.epsilon, "epsilon (streaming, cgf)");
  run_cmd->add_option("--alpha", run.plan.alpha, "alpha (recursive)");

  RunFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid over instances");
  sweep_cmd->add_option("instances", sweep.instances, "instance files")->required();
  add_plan_options(*sweep_cmd, sweep.plan);
  sweep_cmd->add_option("--grid", sweep.grid, "comma-separated epsilon (or alpha) values");

  ReportFlags report;
  CLI::App* report_cmd = app.add_subcommand("report", "aggregate a record file");
  report_cmd->add_option("records", report.path, "record file")->required();
  report_cmd->add_option("--format", report.format, "text | json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadParameter;
  }

  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  if (run_cmd->parsed()) return run_plans(run.instances, run.plan, {std::nullopt}, out, err);
  if (sweep_cmd->parsed()) {
    std::vector<std::optional<double>> grid = {std::nullopt};
    if (!sweep.grid.empty()) {
      try {
        grid.clear();
        for (double v : parse_grid(sweep.grid)) grid.push_back(v);
      } catch (const ParameterError& e) {
        err << "sweep: " << e.what() << "\n";
        return kBadParameter;
      }
    }
    return run_plans(sweep.instances, sweep.plan, grid, out, err);
  }
  return cmd_report(report, out, err);
}

}  // namespace fptsub::cli
