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

#include <cmath>

#include "brute.hpp"
#include "fptsub/multilinear.hpp"
#include "reference.hpp"

using namespace fptsub;
using namespace fptsub::testing;

namespace {

std::vector<double> dense(const FractionalPoint& x, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) out[static_cast<std::size_t>(e)] = x.coordinate(e);
  return out;
}

FractionalPoint random_point(Gen& gen, int n, int resolution, double density) {
  FractionalPoint x(resolution);
  for (int e = 0; e < n; ++e) {
    if (gen.coin(density)) x.add(e, gen.uniform_int(1, resolution));
  }
  return x;
}

}  // namespace

TEST_CASE("fractional point bookkeeping") {
  FractionalPoint x(4);
  x.add(2);
  x.add(2, 2);
  x.add(0, 4);
  CHECK(x.units(2) == 3);
  CHECK(x.coordinate(2) == 0.75);
  CHECK(x.coordinate(1) == 0.0);
  CHECK(x.support() == Subset{0, 2});
  CHECK(x.support_size() == 2);
  CHECK_THROWS_AS(x.add(2, 2), std::domain_error);
  CHECK(x.units(2) == 3);
  x.add_all(Subset{1, 2});
  CHECK(x.units(1) == 1);
  CHECK(x.units(2) == 4);
  CHECK(FractionalPoint::indicator(Subset{1, 3}, 5).units(3) == 5);
  CHECK_THROWS(FractionalPoint(0));
}

TEST_CASE("multilinear value examples") {
  QueryLedger ledger;
  SUBCASE("indicator points give f(S)") {
    Gen gen(4);
    const std::vector<double> table = gen.submodular_table(6);
    const TableFunction f(6, table);
    const ValueOracle fo(f, ledger);
    for (Mask s = 0; s < 64; ++s) {
      CHECK(multilinear_value(fo, FractionalPoint::indicator(from_mask(s), 3)) == table[s]);
    }
  }
  SUBCASE("modular is linear") {
    const std::vector<double> w{1.5, 2.0, 0.0, 7.25};
    const ModularFunction f(w);
    const ValueOracle fo(f, ledger);
    FractionalPoint x(8);
    x.add(0, 3);
    x.add(1, 8);
    x.add(3, 5);
    CHECK(multilinear_value(fo, x) == doctest::Approx(1.5 * 3 / 8 + 2.0 + 7.25 * 5 / 8));
  }
  SUBCASE("two elements sharing one unit item at one half") {
    const CoverageFunction f({1.0}, {{0}, {0}});
    const ValueOracle fo(f, ledger);
    FractionalPoint x(2);
    x.add_all(Subset{0, 1});
    CHECK(multilinear_value(fo, x) == doctest::Approx(0.75));
  }
  SUBCASE("support cap") {
    const ModularFunction f(std::vector<double>(6, 1.0));
    const ValueOracle fo(f, ledger);
    FractionalPoint x(2);
    x.add_all(Subset{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(multilinear_value(fo, x, 4), SupportCapExceeded);
    CHECK(multilinear_value(fo, x, 5) == doctest::Approx(2.5));
    // coordinates at 1 are not enumerated
    FractionalPoint y = FractionalPoint::indicator(Subset{0, 1, 2, 3, 4, 5}, 2);
    CHECK(multilinear_value(fo, y, 0) == 6.0);
  }
}

TEST_CASE("multilinear value matches the dense expansion") {
  Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform_int(1, 9);
    const int res = gen.uniform_int(1, 6);
    const TableFunction f(n, gen.submodular_table(n));
    QueryLedger ledger;
    const ValueOracle fo(f, ledger);
    const FractionalPoint x = random_point(gen, n, res, 0.7);
    const MaskFn fm = as_mask_fn(f);
    const double expect = naive_multilinear(fm, dense(x, n));
    CHECK(multilinear_value(fo, x) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(multilinear_value(fo, x) == doctest::Approx(ref_multilinear(fm, [&] {
                                                        std::vector<int> u;
                                                        for (int e = 0; e < n; ++e) u.push_back(x.units(e));
                                                        return u;
                                                      }(), res)).epsilon(1e-12));
  }
}

TEST_CASE("multilinear marginal examples") {
  QueryLedger ledger;
  SUBCASE("at the origin it is step times the singleton") {
    Gen gen(5);
    const TableFunction f(5, gen.submodular_table(5));
    const ValueOracle fo(f, ledger);
    const FractionalPoint zero(4);
    for (Element e = 0; e < 5; ++e) {
      CHECK(multilinear_marginal(fo, e, zero) ==
            doctest::Approx(0.25 * (fo.value(Subset{e}) - fo.value(Subset{}))));
    }
  }
  SUBCASE("modular gives step times the weight") {
    const ModularFunction f({2.0, 3.0, 5.0});
    const ValueOracle fo(f, ledger);
    FractionalPoint x(5);
    x.add(0, 2);
    x.add(1, 4);
    CHECK(multilinear_marginal(fo, 1, x) == doctest::Approx(0.2 * 3.0));
    CHECK(multilinear_marginal(fo, 2, x) == doctest::Approx(0.2 * 5.0));
  }
  SUBCASE("saturated coordinate gives 0") {
    const ModularFunction f({2.0, 3.0});
    const ValueOracle fo(f, ledger);
    const FractionalPoint x = FractionalPoint::indicator(Subset{0}, 3);
    CHECK(multilinear_marginal(fo, 0, x) == 0.0);
  }
}

TEST_CASE("multilinear marginal equals the difference of values") {
  Gen gen(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.uniform_int(1, 8);
    const int res = gen.uniform_int(1, 5);
    const TableFunction f(n, gen.submodular_table(n));
    QueryLedger ledger;
    const ValueOracle fo(f, ledger);
    const FractionalPoint x = random_point(gen, n, res, 0.6);
    const Element e = gen.uniform_int(0, n - 1);
    FractionalPoint y = x;
    if (y.units(e) < res) y.add(e);
    const double expect = multilinear_value(fo, y) - multilinear_value(fo, x);
    CHECK(multilinear_marginal(fo, e, x) == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("submodularity shows as diminishing multilinear marginals") {
  Gen gen(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform_int(2, 8);
    const int res = 4;
    const TableFunction f(n, gen.submodular_table(n));
    QueryLedger ledger;
    const ValueOracle fo(f, ledger);
    FractionalPoint x = random_point(gen, n, res, 0.5);
    const Element e = gen.uniform_int(0, n - 1);
    Element g = gen.uniform_int(0, n - 1);
    if (g == e) g = (e + 1) % n;
    if (x.units(e) == res) continue;
    const double before = multilinear_marginal(fo, e, x);
    if (x.units(g) < res) x.add(g);
    CHECK(multilinear_marginal(fo, e, x) <= before + 1e-9);
  }
}

TEST_CASE("monte carlo estimates") {
  QueryLedger ledger;
  SUBCASE("indicator points are exact") {
    Gen gen(6);
    const std::vector<double> table = gen.submodular_table(5);
    const TableFunction f(5, table);
    const ValueOracle fo(f, ledger);
    Rng rng(1);
    const McEstimate est = multilinear_mc(fo, FractionalPoint::indicator(Subset{1, 3}, 2), 7, rng);
    CHECK(est.mean == table[0b01010]);
    CHECK(est.stddev == 0.0);
    const McEstimate zero = multilinear_mc(fo, FractionalPoint(3), 5, rng);
    CHECK(zero.mean == table[0]);
  }
  SUBCASE("converges to the exact value") {
    Gen gen(7);
    int within = 0;
    const int cases = 50;
    for (int k = 0; k < cases; ++k) {
      const int n = gen.uniform_int(3, 12);
      const TableFunction f(n, gen.submodular_table(n));
      const ValueOracle fo(f, ledger);
      const FractionalPoint x = random_point(gen, n, 4, 0.8);
      Rng rng(derive_seed(99, static_cast<std::uint64_t>(k)));
      const McEstimate est = multilinear_mc(fo, x, 20000, rng);
      const double exact = multilinear_value(fo, x);
      if (std::abs(est.mean - exact) <= 3 * est.stderr_of_mean() + 1e-12) ++within;
    }
    // 3 standard errors cover 99.7%; allow a couple of misses
    CHECK(within >= cases - 2);
  }
  SUBCASE("marginal estimates agree with the exact marginal") {
    Gen gen(8);
    int within = 0;
    const int cases = 30;
    for (int k = 0; k < cases; ++k) {
      const int n = gen.uniform_int(2, 10);
      const TableFunction f(n, gen.submodular_table(n));
      const ValueOracle fo(f, ledger);
      const FractionalPoint x = random_point(gen, n, 3, 0.7);
      const Element e = gen.uniform_int(0, n - 1);
      Rng rng(derive_seed(5, static_cast<std::uint64_t>(k)));
      const McEstimate est = multilinear_marginal_mc(fo, e, x, 20000, rng);
      const double exact = multilinear_marginal(fo, e, x);
      if (std::abs(est.mean - exact) <= 3 * est.stderr_of_mean() + 1e-12) ++within;
    }
    CHECK(within >= cases - 2);
  }
}
