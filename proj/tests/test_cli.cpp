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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fptsub/instances.hpp"
#include "fptsub_cli/cli.hpp"
#include "fptsub_cli/records.hpp"
#include "fptsub_cli/trials.hpp"

using namespace fptsub;
using namespace fptsub::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "fptsub-cli-test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<TrialRecord> records_of(const std::string& text) {
  std::vector<TrialRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(parse_line(line));
  return out;
}

std::string make_instance(const std::string& name, const std::vector<std::string>& extra) {
  const std::string path = (scratch() / (name + ".json")).string();
  std::vector<std::string> args{"gen", "--name", name, "--out", path};
  args.insert(args.end(), extra.begin(), extra.end());
  const Result r = run(args);
  REQUIRE(r.code == kOk);
  return path;
}

TrialRecord sample_record() {
  TrialRecord r;
  r.instance = "a";
  r.algorithm = "streaming";
  r.trial = 2;
  r.seed = 18446744073709551615ull;
  r.epsilon = 0.1;
  r.r = 3;
  r.n = 40;
  r.value = 1.0 / 3.0;
  r.optimum = 0.5;
  r.ratio = 2.0 / 3.0;
  r.value_queries = 12345;
  r.membership_queries = 77;
  r.peak_h = 4;
  r.peak_buffer = 31;
  r.guarantee_bound = -3.2;
  r.solution = {1, 5, 9};
  return r;
}

}  // namespace

TEST_CASE("records round trip") {
  TrialRecord r = sample_record();
  CHECK(parse_line(to_line(r)) == r);
  r.wall_ms = 12.5;
  r.optimum.reset();
  r.ratio.reset();
  r.peak_buffer.reset();
  CHECK(parse_line(to_line(r)) == r);
  const std::string line = to_line(sample_record());
  CHECK(line.find("\"guarantee_vacuous\":true") != std::string::npos);
  CHECK(line.find("wall_ms") == std::string::npos);
  CHECK(line.find("\"instance\"") < line.find("\"algorithm\""));
  CHECK(line.find("\"peak_H\"") < line.find("\"solution\""));
  CHECK_THROWS_AS(parse_line("{}"), RecordParseError);
  CHECK_THROWS_AS(parse_line("not json"), RecordParseError);
  std::string bad = line;
  bad.replace(bad.find("\"streaming\""), 11, "\"greedy\"");
  CHECK_THROWS_AS(parse_line(bad), RecordParseError);
}

TEST_CASE("aggregation") {
  std::vector<TrialRecord> recs(3, sample_record());
  recs[0].ratio = 0.5;
  recs[1].ratio = 1.0;
  recs[2].ratio = 0.75;
  recs[0].value = 1;
  recs[1].value = 2;
  recs[2].value = 6;
  recs[0].value_queries = 10;
  recs[1].value_queries = 20;
  recs[2].value_queries = 60;
  recs[0].peak_h = 0;
  recs[1].peak_h = 3;
  recs[2].peak_h = 3;
  recs[1].break_triggered = true;
  TrialRecord other = sample_record();
  other.instance = "b";
  recs.push_back(other);
  const std::vector<ReportCell> cells = aggregate(recs);
  REQUIRE(cells.size() == 2);
  const ReportCell& c = cells[0];
  CHECK(c.instance == "a");
  CHECK(c.trials == 3);
  CHECK(c.rated == 3);
  CHECK(*c.mean_ratio == doctest::Approx(0.75));
  CHECK(*c.min_ratio == 0.5);
  CHECK(c.mean_value == doctest::Approx(3.0));
  CHECK(c.mean_value_queries == doctest::Approx(30.0));
  CHECK(c.mean_peak_h == doctest::Approx(2.0));
  CHECK(c.break_frequency == doctest::Approx(1.0 / 3.0));
  CHECK(cells[1].instance == "b");
  CHECK(aggregate({}).empty());
}

TEST_CASE("gen") {
  const auto dir = scratch();
  const std::vector<std::string> args{"gen", "--fn", "coverage", "--matroid", "partition",
                                      "--n", "30", "--r", "3", "--seed", "5"};
  auto with_out = [&](const std::string& file) {
    std::vector<std::string> a = args;
    a.push_back("--out");
    a.push_back((dir / file).string());
    return a;
  };
  const Result first = run(with_out("g1.json"));
  const Result second = run(with_out("g2.json"));
  REQUIRE(first.code == kOk);
  REQUIRE(second.code == kOk);
  CHECK(first.out == "coverage-partition-n30-r3-s5\n");
  CHECK(slurp(dir / "g1.json") == slurp(dir / "g2.json"));
  const LoadedInstance inst = load(dir / "g1.json");
  CHECK(inst.spec.n == 30);
  CHECK(rank(*inst.matroid) >= 1);

  std::vector<std::string> bad = with_out("bad.json");
  bad.push_back("--density");
  bad.push_back("1.5");
  CHECK(run(bad).code == kBadParameter);
  CHECK(run({"gen", "--fn", "nope", "--matroid", "uniform", "--n", "4"}).code == kBadParameter);
  CHECK(run({"gen", "--matroid", "uniform", "--n", "4"}).code == kBadParameter);
  CHECK(run({"frobnicate"}).code == kBadParameter);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("run") {
  const std::string cov = make_instance(
      "cov", {"--fn", "coverage", "--matroid", "uniform", "--n", "24", "--r", "3", "--seed", "1"});
  const std::string cut = make_instance(
      "cut", {"--fn", "directed-cut", "--matroid", "graphic", "--n", "12", "--r", "3", "--seed", "2"});

  SUBCASE("oracle reaches ratio one") {
    const Result r = run({"run", cov, "--alg", "oracle", "--with-opt"});
    REQUIRE(r.code == kOk);
    const auto recs = records_of(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(*recs[0].ratio == 1.0);
    CHECK(recs[0].instance == "cov");
  }
  SUBCASE("streaming trials are feasible and reproducible") {
    const Result r = run({"run", cov, "--alg", "streaming", "--eps", "0.2", "--trials", "50",
                          "--seed", "100", "--with-opt"});
    REQUIRE(r.code == kOk);
    const auto recs = records_of(r.out);
    REQUIRE(recs.size() == 50);
    const LoadedInstance inst = load(cov);
    for (std::size_t k = 0; k < recs.size(); ++k) {
      CHECK(recs[k].trial == static_cast<int>(k));
      CHECK(recs[k].seed == 100 + k);
      CHECK(inst.matroid->independent(recs[k].solution));
      CHECK(inst.function->evaluate(recs[k].solution) == recs[k].value);
      CHECK(*recs[k].ratio <= 1.0);
      CHECK(recs[k].peak_buffer.has_value());
    }
    CHECK(run({"run", cov, "--alg", "streaming", "--eps", "0.2", "--trials", "50", "--seed",
               "100", "--with-opt"})
              .out == r.out);
  }
  SUBCASE("recursive at one half reports a vacuous bound") {
    const Result r = run({"run", cut, "--alg", "recursive", "--alpha", "0.5", "--trials", "3"});
    REQUIRE(r.code == kOk);
    for (const TrialRecord& rec : records_of(r.out)) {
      CHECK(rec.guarantee_vacuous());
      CHECK(*rec.alpha == 0.5);
    }
  }
  SUBCASE("cgf") {
    const Result r = run({"run", cut, "--alg", "cgf", "--eps", "0.5", "--trials", "4", "--with-opt"});
    REQUIRE(r.code == kOk);
    const auto recs = records_of(r.out);
    REQUIRE(recs.size() == 4);
    for (const TrialRecord& rec : recs) CHECK_FALSE(rec.guarantee_bound.has_value());
  }
  SUBCASE("parameter and budget errors") {
    CHECK(run({"run", cov, "--alg", "streaming", "--eps", "0.5"}).code == kBadParameter);
    CHECK(run({"run", cov, "--alg", "cgf", "--eps", "0.3"}).code == kBadParameter);
    CHECK(run({"run", cov, "--alg", "recursive", "--alpha", "0.4"}).code == kBadParameter);
    CHECK(run({"run", cov, "--alg", "greedy"}).code == kBadParameter);
    CHECK(run({"run", cov, "--alg", "oracle", "--budget", "3"}).code == kBudget);
    CHECK(run({"run", (scratch() / "nope.json").string(), "--alg", "oracle"}).code == kFailure);
  }
  SUBCASE("timing adds wall_ms only on request") {
    CHECK(run({"run", cov, "--alg", "oracle"}).out.find("wall_ms") == std::string::npos);
    CHECK(run({"run", cov, "--alg", "oracle", "--timing"}).out.find("wall_ms") != std::string::npos);
  }
  SUBCASE("worker count does not change the records") {
    const std::vector<std::string> args{"sweep", cov, cut, "--alg", "streaming", "--grid",
                                        "0.1,0.3", "--trials", "7", "--with-opt"};
    setenv("FPTSUB_WORKERS", "1", 1);
    const Result one = run(args);
    setenv("FPTSUB_WORKERS", "3", 1);
    const Result three = run(args);
    unsetenv("FPTSUB_WORKERS");
    REQUIRE(one.code == kOk);
    CHECK(one.out == three.out);
    CHECK(records_of(one.out).size() == 28);
  }
}

TEST_CASE("report") {
  const auto dir = scratch();
  {
    std::ofstream(dir / "empty.jsonl");
  }
  const Result empty = run({"report", (dir / "empty.jsonl").string()});
  CHECK(empty.code == kOk);
  const Result empty_json = run({"report", (dir / "empty.jsonl").string(), "--format", "json"});
  CHECK(empty_json.code == kOk);
  CHECK(empty_json.out.find("\"cells\"") != std::string::npos);

  std::vector<TrialRecord> recs(3, sample_record());
  recs[0].ratio = 0.25;
  recs[1].ratio = 0.5;
  recs[2].ratio = 0.75;
  {
    std::ofstream out(dir / "three.jsonl");
    for (const TrialRecord& r : recs) out << to_line(r) << "\n\n";
  }
  const Result text = run({"report", (dir / "three.jsonl").string()});
  CHECK(text.code == kOk);
  CHECK(text.out.find("0.5") != std::string::npos);
  const Result json = run({"report", (dir / "three.jsonl").string(), "--format", "json"});
  CHECK(json.code == kOk);
  CHECK(json.out.find("\"mean_ratio\"") != std::string::npos);
  CHECK(run({"report", (dir / "three.jsonl").string(), "--format", "xml"}).code == kBadParameter);

  {
    std::ofstream out(dir / "broken.jsonl");
    out << to_line(recs[0]) << "\n" << "{\"instance\": 3}\n";
  }
  const Result broken = run({"report", (dir / "broken.jsonl").string()});
  CHECK(broken.code == kBadRecord);
  CHECK(broken.err.find("line 2") != std::string::npos);
}

TEST_CASE("streaming guarantee") {
  CHECK(streaming_guarantee(0.1, 4, 200) == doctest::Approx(0.5 - 8 * std::sqrt(0.2 + 0.04)));
}
