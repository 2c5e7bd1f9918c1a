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

#ifndef FPTSUB_INSTANCES_HPP_
#define FPTSUB_INSTANCES_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fptsub/matroids.hpp"
#include "fptsub/oracles.hpp"
#include "fptsub/subset.hpp"

namespace fptsub {

inline constexpr int kInstanceFormatVersion = 1;

struct CoverageSpec {
  std::vector<double> item_weights;
  std::vector<std::vector<int>> covers;  // per element
  friend bool operator==(const CoverageSpec&, const CoverageSpec&) = default;
};

struct DirectedCutSpec {
  std::vector<Arc> arcs;
  friend bool operator==(const DirectedCutSpec&, const DirectedCutSpec&) = default;
};

struct ModularSpec {
  std::vector<double> weights;
  friend bool operator==(const ModularSpec&, const ModularSpec&) = default;
};

struct TableFunctionSpec {
  std::vector<double> values;  // 2^n entries
  friend bool operator==(const TableFunctionSpec&, const TableFunctionSpec&) = default;
};

using FunctionSpec = std::variant<CoverageSpec, DirectedCutSpec, ModularSpec, TableFunctionSpec>;

struct UniformSpec {
  int rank = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct PartitionSpec {
  std::vector<PartitionBlock> blocks;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

struct TableMatroidSpec {
  std::vector<Subset> independent_sets;
  friend bool operator==(const TableMatroidSpec&, const TableMatroidSpec&) = default;
};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec, TableMatroidSpec>;

struct InstanceSpec {
  int n = 0;
  FunctionSpec function;
  MatroidSpec matroid;
  std::uint64_t seed = 0;
  std::string name;
  std::string notes;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Schema violation while reading an instance document; `path()` names the
// offending field, e.g. "function.payload.weights[3]".
class InstanceParseError : public std::runtime_error {
 public:
  InstanceParseError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string function_family(const FunctionSpec& spec);
std::string matroid_family(const MatroidSpec& spec);

// Oracles for a spec. Throws std::invalid_argument on inconsistent payloads.
std::unique_ptr<SetFunction> build_function(int n, const FunctionSpec& spec);
std::unique_ptr<Matroid> build_matroid(int n, const MatroidSpec& spec);

struct LoadedInstance {
  InstanceSpec spec;
  std::unique_ptr<SetFunction> function;
  std::unique_ptr<Matroid> matroid;
};

LoadedInstance instantiate(InstanceSpec spec);

// Structured text (JSON). Reals are written as decimal strings with 17
// significant digits, so every double round-trips exactly.
std::string serialize(const InstanceSpec& spec);
InstanceSpec parse_instance(const std::string& text);

void save(const InstanceSpec& spec, const std::filesystem::path& path);
LoadedInstance load(const std::filesystem::path& path);

std::string format_real(double value);

struct WeightRange {
  double low = 1.0;
  double high = 1.0;
};

// Each (element, item) incidence is present independently with probability
// `density`; item weights are uniform in the range. Pair with any matroid.
// Unless `allow_degenerate`, a draw whose value is zero everywhere is
// rejected with std::invalid_argument (all-zero weights) or patched so that
// element 0 covers item 0 (no incidence at all).
CoverageSpec gen_coverage(int n, int items, double density, WeightRange weights,
                          std::uint64_t seed, bool allow_degenerate = false);

// Each ordered pair (u, v), u != v, carries an arc with probability
// `arc_density`. Unless `allow_degenerate`, all-zero weight ranges are
// rejected and a draw with no arc at all gets a single arc 0 -> 1.
DirectedCutSpec gen_directed_cut(int n, double arc_density, WeightRange weights,
                                 std::uint64_t seed, bool allow_degenerate = false);

// Uniform weights; all-zero ranges need `allow_degenerate`.
ModularSpec gen_modular(int n, WeightRange weights, std::uint64_t seed,
                        bool allow_degenerate = false);

// A tabulated non-monotone submodular function: a random directed cut plus a
// random coverage function, n <= 20.
TableFunctionSpec gen_table_function(int n, std::uint64_t seed);

UniformSpec gen_uniform(int rank);

// Elements are dealt round-robin after a shuffle into `blocks` blocks; each
// capacity is uniform in [1, max_capacity].
PartitionSpec gen_partition(int n, int blocks, int max_capacity, std::uint64_t seed);

// n edges over `vertices` vertices with uniformly random endpoints;
// self-loops (matroid loops) only when `allow_loops`.
GraphicSpec gen_graphic(int n, int vertices, std::uint64_t seed, bool allow_loops = false);

// All independent sets of a matroid over at most 20 elements.
TableMatroidSpec tabulate_matroid(const Matroid& m);

}  // namespace fptsub

#endif  // FPTSUB_INSTANCES_HPP_
