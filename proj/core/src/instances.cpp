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

#include "fptsub/instances.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fptsub/rng.hpp"

namespace fptsub {
namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---- writing ----

Json reals(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(format_real(v));
  return out;
}

Json function_payload(const FunctionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const CoverageSpec& s) {
            Json p;
            p["item_weights"] = reals(s.item_weights);
            p["covers"] = s.covers;
            return p;
          },
          [](const DirectedCutSpec& s) {
            Json arcs = Json::array();
            for (const Arc& a : s.arcs) arcs.push_back(Json::array({a.from, a.to, format_real(a.weight)}));
            Json p;
            p["arcs"] = std::move(arcs);
            return p;
          },
          [](const ModularSpec& s) {
            Json p;
            p["weights"] = reals(s.weights);
            return p;
          },
          [](const TableFunctionSpec& s) {
            Json p;
            p["values"] = reals(s.values);
            return p;
          },
      },
      spec);
}

Json matroid_payload(const MatroidSpec& spec) {
  return std::visit(
      Overloaded{
          [](const UniformSpec& s) {
            Json p;
            p["rank"] = s.rank;
            return p;
          },
          [](const PartitionSpec& s) {
            Json blocks = Json::array();
            for (const PartitionBlock& b : s.blocks) {
              Json block;
              block["elements"] = b.elements;
              block["capacity"] = b.capacity;
              blocks.push_back(std::move(block));
            }
            Json p;
            p["blocks"] = std::move(blocks);
            return p;
          },
          [](const GraphicSpec& s) {
            Json edges = Json::array();
            for (const auto& [u, v] : s.edges) edges.push_back(Json::array({u, v}));
            Json p;
            p["vertices"] = s.vertices;
            p["edges"] = std::move(edges);
            return p;
          },
          [](const TableMatroidSpec& s) {
            Json p;
            p["independent_sets"] = s.independent_sets;
            return p;
          },
      },
      spec);
}

// ---- reading ----

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InstanceParseError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InstanceParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string child(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) throw InstanceParseError(child(path, key), "expected an array");
  return a;
}

long long read_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InstanceParseError(path, "expected an integer");
  return j.get<long long>();
}

int read_int(const Json& j, const std::string& path) {
  const long long v = read_integer(j, path);
  if (v < INT32_MIN || v > INT32_MAX) throw InstanceParseError(path, "integer out of range");
  return static_cast<int>(v);
}

double read_real(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw InstanceParseError(path, "expected a decimal string");
  const std::string& text = j.get_ref<const std::string&>();
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InstanceParseError(path, "malformed real '" + text + "'");
  }
  return v;
}

std::vector<double> read_reals(const Json& j, const char* key, const std::string& path) {
  const Json& a = array_field(j, key, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_real(a[i], index(child(path, key), i)));
  return out;
}

std::vector<int> read_ints(const Json& a, const std::string& path) {
  if (!a.is_array()) throw InstanceParseError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_int(a[i], index(path, i)));
  return out;
}

FunctionSpec read_function(const Json& j, const std::string& path) {
  const Json& fam = field(j, "family", path);
  if (!fam.is_string()) throw InstanceParseError(child(path, "family"), "expected a string");
  const std::string family = fam.get<std::string>();
  const std::string pp = child(path, "payload");
  const Json& p = field(j, "payload", path);
  if (family == "coverage") {
    CoverageSpec s;
    s.item_weights = read_reals(p, "item_weights", pp);
    const Json& covers = array_field(p, "covers", pp);
    for (std::size_t i = 0; i < covers.size(); ++i) {
      s.covers.push_back(read_ints(covers[i], index(child(pp, "covers"), i)));
    }
    return s;
  }
  if (family == "directed-cut") {
    DirectedCutSpec s;
    const Json& arcs = array_field(p, "arcs", pp);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string ap = index(child(pp, "arcs"), i);
      if (!arcs[i].is_array() || arcs[i].size() != 3) {
        throw InstanceParseError(ap, "expected [from, to, weight]");
      }
      s.arcs.push_back(Arc{read_int(arcs[i][0], index(ap, 0)), read_int(arcs[i][1], index(ap, 1)),
                           read_real(arcs[i][2], index(ap, 2))});
    }
    return s;
  }
  if (family == "modular") return ModularSpec{read_reals(p, "weights", pp)};
  if (family == "table") return TableFunctionSpec{read_reals(p, "values", pp)};
  throw InstanceParseError(child(path, "family"), "unknown function family '" + family + "'");
}

MatroidSpec read_matroid(const Json& j, const std::string& path) {
  const Json& fam = field(j, "family", path);
  if (!fam.is_string()) throw InstanceParseError(child(path, "family"), "expected a string");
  const std::string family = fam.get<std::string>();
  const std::string pp = child(path, "payload");
  const Json& p = field(j, "payload", path);
  if (family == "uniform") return UniformSpec{read_int(field(p, "rank", pp), child(pp, "rank"))};
  if (family == "partition") {
    PartitionSpec s;
    const Json& blocks = array_field(p, "blocks", pp);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string bp = index(child(pp, "blocks"), i);
      PartitionBlock b;
      b.elements = read_ints(field(blocks[i], "elements", bp), child(bp, "elements"));
      b.capacity = read_int(field(blocks[i], "capacity", bp), child(bp, "capacity"));
      s.blocks.push_back(std::move(b));
    }
    return s;
  }
  if (family == "graphic") {
    GraphicSpec s;
    s.vertices = read_int(field(p, "vertices", pp), child(pp, "vertices"));
    const Json& edges = array_field(p, "edges", pp);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::vector<int> uv = read_ints(edges[i], index(child(pp, "edges"), i));
      if (uv.size() != 2) throw InstanceParseError(index(child(pp, "edges"), i), "expected [u, v]");
      s.edges.emplace_back(uv[0], uv[1]);
    }
    return s;
  }
  if (family == "table") {
    TableMatroidSpec s;
    const Json& sets = array_field(p, "independent_sets", pp);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      s.independent_sets.push_back(read_ints(sets[i], index(child(pp, "independent_sets"), i)));
    }
    return s;
  }
  throw InstanceParseError(child(path, "family"), "unknown matroid family '" + family + "'");
}

double draw_weight(Rng& rng, WeightRange range) {
  return range.low + (range.high - range.low) * rng.uniform01();
}

void require_range(WeightRange range) {
  if (!(range.low >= 0.0) || !(range.high >= range.low) || !std::isfinite(range.high)) {
    throw std::invalid_argument("weight range must satisfy 0 <= low <= high");
  }
}

void require_nondegenerate(WeightRange range, bool allow_degenerate) {
  if (!allow_degenerate && !(range.high > 0.0)) {
    throw std::invalid_argument("all-zero weights need the degenerate flag");
  }
}

void require_density(double density, const char* what) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in (0, 1]");
  }
}

}  // namespace

InstanceParseError::InstanceParseError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string function_family(const FunctionSpec& spec) {
  return std::visit(Overloaded{[](const CoverageSpec&) { return "coverage"; },
                               [](const DirectedCutSpec&) { return "directed-cut"; },
                               [](const ModularSpec&) { return "modular"; },
                               [](const TableFunctionSpec&) { return "table"; }},
                    spec);
}

std::string matroid_family(const MatroidSpec& spec) {
  return std::visit(Overloaded{[](const UniformSpec&) { return "uniform"; },
                               [](const PartitionSpec&) { return "partition"; },
                               [](const GraphicSpec&) { return "graphic"; },
                               [](const TableMatroidSpec&) { return "table"; }},
                    spec);
}

std::unique_ptr<SetFunction> build_function(int n, const FunctionSpec& spec) {
  auto check_n = [n](std::size_t got, const char* what) {
    if (got != static_cast<std::size_t>(n)) {
      throw std::invalid_argument(std::string(what) + " has " + std::to_string(got) +
                                  " entries for n = " + std::to_string(n));
    }
  };
  return std::visit(
      Overloaded{
          [&](const CoverageSpec& s) -> std::unique_ptr<SetFunction> {
            check_n(s.covers.size(), "coverage covers");
            return std::make_unique<CoverageFunction>(s.item_weights, s.covers);
          },
          [&](const DirectedCutSpec& s) -> std::unique_ptr<SetFunction> {
            return std::make_unique<DirectedCutFunction>(n, s.arcs);
          },
          [&](const ModularSpec& s) -> std::unique_ptr<SetFunction> {
            check_n(s.weights.size(), "modular weights");
            return std::make_unique<ModularFunction>(s.weights);
          },
          [&](const TableFunctionSpec& s) -> std::unique_ptr<SetFunction> {
            return std::make_unique<TableFunction>(n, s.values);
          },
      },
      spec);
}

std::unique_ptr<Matroid> build_matroid(int n, const MatroidSpec& spec) {
  return std::visit(
      Overloaded{
          [&](const UniformSpec& s) -> std::unique_ptr<Matroid> {
            return std::make_unique<UniformMatroid>(n, s.rank);
          },
          [&](const PartitionSpec& s) -> std::unique_ptr<Matroid> {
            return std::make_unique<PartitionMatroid>(n, s.blocks);
          },
          [&](const GraphicSpec& s) -> std::unique_ptr<Matroid> {
            if (s.edges.size() != static_cast<std::size_t>(n)) {
              throw std::invalid_argument("graphic matroid needs exactly n edges");
            }
            return std::make_unique<GraphicMatroid>(s.vertices, s.edges);
          },
          [&](const TableMatroidSpec& s) -> std::unique_ptr<Matroid> {
            return std::make_unique<TableMatroid>(n, s.independent_sets);
          },
      },
      spec);
}

LoadedInstance instantiate(InstanceSpec spec) {
  if (spec.n < 1) throw std::invalid_argument("instance: n must be >= 1");
  LoadedInstance out;
  out.function = build_function(spec.n, spec.function);
  out.matroid = build_matroid(spec.n, spec.matroid);
  out.spec = std::move(spec);
  return out;
}

std::string serialize(const InstanceSpec& spec) {
  Json doc;
  doc["version"] = kInstanceFormatVersion;
  doc["n"] = spec.n;
  doc["function"]["family"] = function_family(spec.function);
  doc["function"]["payload"] = function_payload(spec.function);
  doc["matroid"]["family"] = matroid_family(spec.matroid);
  doc["matroid"]["payload"] = matroid_payload(spec.matroid);
  doc["seed"] = spec.seed;
  doc["metadata"]["name"] = spec.name;
  doc["metadata"]["notes"] = spec.notes;
  return doc.dump(1) + "\n";
}

InstanceSpec parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InstanceParseError("", std::string("malformed document: ") + e.what());
  }
  const long long version = read_integer(field(doc, "version", ""), "version");
  if (version != kInstanceFormatVersion) {
    throw InstanceParseError("version", "unsupported version " + std::to_string(version));
  }
  InstanceSpec spec;
  spec.n = read_int(field(doc, "n", ""), "n");
  if (spec.n < 1) throw InstanceParseError("n", "must be >= 1");
  spec.function = read_function(field(doc, "function", ""), "function");
  spec.matroid = read_matroid(field(doc, "matroid", ""), "matroid");
  const Json& seed = field(doc, "seed", "");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw InstanceParseError("seed", "expected a nonnegative integer");
  }
  spec.seed = seed.get<std::uint64_t>();
  const Json& meta = field(doc, "metadata", "");
  const Json& name = field(meta, "name", "metadata");
  const Json& notes = field(meta, "notes", "metadata");
  if (!name.is_string()) throw InstanceParseError("metadata.name", "expected a string");
  if (!notes.is_string()) throw InstanceParseError("metadata.notes", "expected a string");
  spec.name = name.get<std::string>();
  spec.notes = notes.get<std::string>();
  return spec;
}

void save(const InstanceSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << serialize(spec);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

LoadedInstance load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return instantiate(parse_instance(text.str()));
}

CoverageSpec gen_coverage(int n, int items, double density, WeightRange weights,
                          std::uint64_t seed, bool allow_degenerate) {
  if (n < 1 || items < 1) throw std::invalid_argument("coverage: n and items must be >= 1");
  require_density(density, "density");
  require_range(weights);
  require_nondegenerate(weights, allow_degenerate);
  Rng rng(seed);
  CoverageSpec s;
  for (int i = 0; i < items; ++i) s.item_weights.push_back(draw_weight(rng, weights));
  s.covers.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < items; ++i) {
      if (rng.bernoulli(density)) s.covers[static_cast<std::size_t>(e)].push_back(i);
    }
  }
  if (!allow_degenerate) {
    bool any = false;
    for (std::size_t e = 0; e < s.covers.size(); ++e) {
      for (int i : s.covers[e]) any = any || s.item_weights[static_cast<std::size_t>(i)] > 0.0;
    }
    if (!any) {
      s.item_weights[0] = weights.high;
      if (s.covers[0].empty() || s.covers[0].front() != 0) s.covers[0].insert(s.covers[0].begin(), 0);
    }
  }
  return s;
}

DirectedCutSpec gen_directed_cut(int n, double arc_density, WeightRange weights,
                                 std::uint64_t seed, bool allow_degenerate) {
  if (n < 1) throw std::invalid_argument("directed-cut: n must be >= 1");
  require_density(arc_density, "arc density");
  require_range(weights);
  require_nondegenerate(weights, allow_degenerate);
  Rng rng(seed);
  DirectedCutSpec s;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(arc_density)) s.arcs.push_back(Arc{u, v, draw_weight(rng, weights)});
    }
  }
  if (s.arcs.empty() && !allow_degenerate && n >= 2) s.arcs.push_back(Arc{0, 1, weights.high});
  return s;
}

ModularSpec gen_modular(int n, WeightRange weights, std::uint64_t seed, bool allow_degenerate) {
  if (n < 1) throw std::invalid_argument("modular: n must be >= 1");
  require_range(weights);
  require_nondegenerate(weights, allow_degenerate);
  Rng rng(seed);
  ModularSpec s;
  for (int e = 0; e < n; ++e) s.weights.push_back(draw_weight(rng, weights));
  return s;
}

TableFunctionSpec gen_table_function(int n, std::uint64_t seed) {
  if (n < 1 || n > TableFunction::kMaxElements) {
    throw std::invalid_argument("table function: n must lie in [1, 20]");
  }
  const DirectedCutFunction cut(n, gen_directed_cut(n, 0.35, {0.5, 2.0}, derive_seed(seed, 0)).arcs);
  const CoverageSpec cov = gen_coverage(n, std::max(2, n / 2), 0.3, {0.5, 2.0}, derive_seed(seed, 1));
  const CoverageFunction coverage(cov.item_weights, cov.covers);
  TableFunctionSpec s;
  const std::uint64_t count = std::uint64_t{1} << n;
  const GroundSet all(n);
  s.values.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Subset x = subset_from_mask(all.elements(), mask);
    s.values.push_back(cut.evaluate(x) + coverage.evaluate(x));
  }
  return s;
}

UniformSpec gen_uniform(int rank) {
  if (rank < 0) throw std::invalid_argument("uniform: negative rank");
  return UniformSpec{rank};
}

PartitionSpec gen_partition(int n, int blocks, int max_capacity, std::uint64_t seed) {
  if (blocks < 1 || blocks > n) throw std::invalid_argument("partition: need 1 <= blocks <= n");
  if (max_capacity < 1) throw std::invalid_argument("partition: max capacity must be >= 1");
  Rng rng(seed);
  const std::vector<Element> order = sample_permutation(n, rng);
  PartitionSpec s;
  s.blocks.resize(static_cast<std::size_t>(blocks));
  for (int k = 0; k < n; ++k) {
    s.blocks[static_cast<std::size_t>(k % blocks)].elements.push_back(order[static_cast<std::size_t>(k)]);
  }
  for (PartitionBlock& b : s.blocks) {
    b.elements = make_subset(std::move(b.elements));
    b.capacity = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_capacity)));
  }
  return s;
}

GraphicSpec gen_graphic(int n, int vertices, std::uint64_t seed, bool allow_loops) {
  if (vertices < 2 && !allow_loops) throw std::invalid_argument("graphic: need >= 2 vertices");
  if (vertices < 1) throw std::invalid_argument("graphic: need >= 1 vertex");
  Rng rng(seed);
  GraphicSpec s;
  s.vertices = vertices;
  const auto nv = static_cast<std::uint64_t>(vertices);
  for (int e = 0; e < n; ++e) {
    const int u = static_cast<int>(rng.below(nv));
    int v = static_cast<int>(rng.below(nv));
    while (!allow_loops && v == u) v = static_cast<int>(rng.below(nv));
    s.edges.emplace_back(u, v);
  }
  return s;
}

TableMatroidSpec tabulate_matroid(const Matroid& m) {
  const int n = m.ground().universe();
  if (m.ground().size() != n || n > TableMatroid::kMaxElements) {
    throw std::invalid_argument("tabulate_matroid: needs a full ground set of at most 20 elements");
  }
  TableMatroidSpec s;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Subset x = subset_from_mask(m.ground().elements(), mask);
    if (m.independent(x)) s.independent_sets.push_back(std::move(x));
  }
  return s;
}

}  // namespace fptsub
