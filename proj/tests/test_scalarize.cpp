// Copyright 2026 The sysvar Authors
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
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sysvar/errors.hpp"
#include "sysvar/saa.hpp"
#include "sysvar/scalarize.hpp"

using namespace sysvar;
using sysvar::testing::random_toy;

TEST_CASE("capital bounds of a small example") {
  FinancialNetwork net;
  net.pi = Matrix(2, 2);
  net.pi << 0, 1, 1, 0;
  net.pbar = Vector(2);
  net.pbar << 5, 1;
  ScenarioSet sc{RowMatrix(2, 2)};
  sc.values << 1, 2, 3, 0.5;
  const CapitalBox box = z_bounds(net, Grouping::singletons(2), sc);
  CHECK(box.hi(0) == 5.0);
  CHECK(box.hi(1) == 1.0);
  CHECK(box.lo(0) == -1.0);
  CHECK(box.lo(1) == -0.5);
  const CapitalBox one = z_bounds(net, Grouping::single(2), sc);
  CHECK(one.hi(0) == 5.0);
  CHECK(one.lo(0) == -0.5);
}

TEST_CASE("threshold above total obligations is infeasible") {
  testing::Toy t = random_toy(2, 3, 2, 5);
  t.spec.alpha = t.net.total_obligations() * 1.01;
  CHECK(provably_infeasible(t.instance()));
  CHECK_FALSE(weighted_sum(t.instance(), Vector::Ones(2)).feasible);
  CHECK_FALSE(norm_min(t.instance(), Vector::Zero(2)).feasible);
  CHECK_FALSE(ideal_point(t.instance()).feasible);
  CHECK_FALSE(bisection_unit(t.instance(), 0).feasible);
}

TEST_CASE("weighted sum scales linearly and its solution is minimal") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const testing::Toy t = random_toy(seed, 4, 2, 8);
    Vector w(2);
    w << 0.7, 0.3;
    const ScalarResult a = weighted_sum(t.instance(), w);
    const ScalarResult b = weighted_sum(t.instance(), 2.0 * w);
    REQUIRE(a.feasible);
    REQUIRE(b.feasible);
    CHECK(b.value == doctest::Approx(2.0 * a.value).epsilon(1e-6).scale(1.0));
    for (int j = 0; j < 2; ++j) {
      CHECK_FALSE(saa::membership(t.instance(), a.z - 1e-4 * Vector::Unit(2, j)).accepted);
    }
  }
}

TEST_CASE("ideal point agrees across methods") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const testing::Toy t = random_toy(seed, 4, 3, 8);
    const IdealPoint milp = ideal_point(t.instance(), IdealMethod::kMilp);
    const IdealPoint bis = ideal_point(t.instance(), IdealMethod::kBisection);
    REQUIRE(milp.feasible);
    REQUIRE(bis.feasible);
    for (int j = 0; j < 3; ++j) {
      CHECK(milp.z(j) <= bis.z(j) + 1e-7);
      CHECK(bis.z(j) - milp.z(j) <= 1.1e-6);
    }
  }
  CHECK(parse_ideal_method("auto") == IdealMethod::kAuto);
  CHECK_THROWS_AS(parse_ideal_method("simplex"), ValidationError);
}

TEST_CASE("norm minimization properties") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const testing::Toy t = random_toy(seed, 4, 2, 8);
    const Instance inst = t.instance();
    const CapitalBox box = z_bounds(t.net, t.grouping, t.scenarios);
    CHECK(norm_min(inst, box.hi).value == 0.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Vector> vs;
    std::vector<double> ds;
    for (int k = 0; k < 4; ++k) {
      Vector v(2);
      for (int j = 0; j < 2; ++j) v(j) = box.lo(j) + u(rng) * (box.hi(j) - box.lo(j));
      const ScalarResult r = norm_min(inst, v);
      REQUIRE(r.feasible);
      CHECK(r.optimal);
      CHECK(saa::membership(inst, r.z).accepted);
      CHECK(r.value <= (box.hi.cwiseMax(v) - v).norm() + 1e-9);
      CHECK(r.value == doctest::Approx((r.z - v).norm()).epsilon(1e-9).scale(1.0));
      vs.push_back(v);
      ds.push_back(r.value);
    }
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        CHECK(std::abs(ds[a] - ds[b]) <= (vs[a] - vs[b]).norm() + 1e-6);
      }
    }
  }
}

TEST_CASE("instance validation") {
  testing::Toy t = random_toy(1, 3, 2, 4);
  t.spec.lambda = 1.0;
  CHECK_THROWS_AS(validate(t.instance()), ValidationError);
  t.spec.lambda = 0.2;
  CHECK_THROWS_AS(norm_min(t.instance(), Vector::Zero(3)), ValidationError);
  CHECK_THROWS_AS(bisection_unit(t.instance(), 5), ValidationError);
}
