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
#include "sysvar/clearing.hpp"
#include "sysvar/errors.hpp"

using namespace sysvar;
using namespace sysvar::clearing;

namespace {

FinancialNetwork cycle(double pbar) {
  FinancialNetwork net;
  net.pi = Matrix(2, 2);
  net.pi << 0, 1, 1, 0;
  net.pbar = Vector::Constant(2, pbar);
  return net;
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Vector random_x(std::mt19937_64& rng, int d, double scale) {
  std::uniform_real_distribution<double> u(0.0, scale);
  Vector x(d);
  for (int i = 0; i < d; ++i) x(i) = u(rng);
  return x;
}

}  // namespace

TEST_CASE("fixed point on the two-bank cycle") {
  ClearingResult r = clearing_fixed_point(cycle(1.0), vec({1, 1}));
  CHECK(r.p == vec({1, 1}));
  CHECK(r.total_payment == 2.0);
  CHECK(r.defaults == std::vector<bool>{false, false});

  r = clearing_fixed_point(cycle(2.0), vec({1, 0}));
  CHECK((r.p - vec({2, 2})).norm() <= 1e-12);
  CHECK(r.total_payment == doctest::Approx(4.0));

  r = clearing_fixed_point(cycle(2.0), vec({0, 0}));
  CHECK((r.p - vec({2, 2})).norm() <= 1e-12);
  CHECK(is_clearing_vector(cycle(2.0), vec({0, 0}), vec({0, 0}), 1e-12));
}

TEST_CASE("fixed point defaults and priority on a chain") {
  // Bank 0 owes bank 1, bank 1 owes bank 2, bank 2 owes bank 0.
  FinancialNetwork net;
  net.pi = Matrix::Zero(3, 3);
  net.pi(0, 1) = net.pi(1, 2) = net.pi(2, 0) = 1.0;
  net.pbar = vec({5, 1, 10});
  const Vector x = vec({0, 0, 2});
  const ClearingResult r = clearing_fixed_point(net, x);
  CHECK(is_clearing_vector(net, x, r.p, 1e-9));
  // Bank 0 receives 0 + p2, pays min(5, p2); bank 2 receives p1 + 2.
  CHECK(r.p(1) == doctest::Approx(1.0));
  CHECK(r.p(2) == doctest::Approx(3.0));
  CHECK(r.p(0) == doctest::Approx(3.0));
  CHECK(r.defaults == std::vector<bool>{true, false, true});
}

TEST_CASE("negative cash flow is outside the domain") {
  CHECK_THROWS_AS(clearing_fixed_point(cycle(1.0), vec({-0.1, 1})), DomainError);
  CHECK(aggregate_en(cycle(1.0), vec({-0.1, 1})) == -INFINITY);
  CHECK(aggregate_en(cycle(2.0), vec({1, 0})) == doctest::Approx(4.0));
}

TEST_CASE("clearing LP agrees with the fixed point") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 6;
    const FinancialNetwork net = testing::random_network(rng, d);
    const Vector x = random_x(rng, d, trial % 2 ? 2.0 : 10.0);
    const ClearingResult fp = clearing_fixed_point(net, x);
    const ClearingResult lp = clearing_lp(net, x, Vector::Ones(d));
    CHECK((fp.p - lp.p).cwiseAbs().maxCoeff() <= 1e-7);
    CHECK(is_clearing_vector(net, x, lp.p, 1e-7));
    Vector w = Vector::Ones(d);
    w(0) = 1000.0;
    const ClearingResult lpw = clearing_lp(net, x, w);
    CHECK((fp.p - lpw.p).cwiseAbs().maxCoeff() <= 1e-7);
  }
  CHECK(clearing_lp(cycle(2.0), vec({0, 0}), Vector::Ones(2)).total_payment == doctest::Approx(4.0));
  CHECK_THROWS_AS(clearing_lp(cycle(2.0), vec({0, 0}), vec({1, 0})), ValidationError);
}

TEST_CASE("aggregate is bounded, monotone and midpoint concave") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 3 + trial % 5;
    const FinancialNetwork net = testing::random_network(rng, d);
    const Vector x = random_x(rng, d, 6.0);
    const Vector y = random_x(rng, d, 6.0);
    const double lx = aggregate_en(net, x);
    CHECK(lx >= 0.0);
    CHECK(lx <= net.total_obligations() + 1e-12);
    CHECK(aggregate_en(net, x + y) >= lx - 1e-9);
    CHECK(aggregate_en(net, 0.5 * (x + y)) >= 0.5 * (lx + aggregate_en(net, y)) - 1e-9);
    CHECK(aggregate_en(net, x + net.pbar) == doctest::Approx(net.total_obligations()).epsilon(1e-12));
  }
}

TEST_CASE("supergradient from the dual") {
  // Locally flat region.
  const Vector flat = en_supergradient(cycle(1.0), vec({5, 5}));
  CHECK(flat.norm() <= 1e-12);

  // x = (1, 0) on the pbar = 2 cycle: finite differences.
  const FinancialNetwork net = cycle(2.0);
  const Vector x = vec({1, 0});
  const Vector mu = en_supergradient(net, x);
  const double h = 1e-5;
  for (int i = 0; i < 2; ++i) {
    const Vector e = Vector::Unit(2, i);
    const double up = (aggregate_en(net, x + h * e) - aggregate_en(net, x)) / h;
    const double down = (aggregate_en(net, x) - aggregate_en(net, x - h * e)) / h;
    CHECK(mu(i) >= up - 1e-6);
    CHECK(mu(i) <= down + 1e-6);
  }

  std::mt19937_64 rng(5);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 3 + trial % 4;
    const FinancialNetwork rn = testing::random_network(rng, d);
    const Vector a = random_x(rng, d, 5.0);
    const Vector b = random_x(rng, d, 5.0);
    const Vector g = en_supergradient(rn, a);
    CHECK((g.array() >= 0.0).all());
    if (aggregate_en(rn, b) > aggregate_en(rn, a) + g.dot(b - a) + 1e-8) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("enumeration on the circular example") {
  const FinancialNetwork net = cycle(2.0);
  const std::vector<ClearingPolytope> polys = enumerate_clearing_vectors(net, vec({0, 0}));
  bool segment = false, point = false;
  for (const ClearingPolytope& p : polys) {
    if (p.y == std::vector<int>{0, 0}) {
      segment = p.contains(vec({0, 0}), 1e-9) && p.contains(vec({1, 1}), 1e-9) &&
                p.contains(vec({2, 2}), 1e-9) && !p.contains(vec({1, 1.5}), 1e-9);
    }
    if (p.y == std::vector<int>{1, 1}) {
      point = p.contains(vec({2, 2}), 1e-9) && !p.contains(vec({1, 1}), 1e-9);
    }
    // Every emitted system holds only points on the diagonal.
    CHECK_FALSE(p.contains(vec({0.5, 1}), 1e-9));
  }
  CHECK(segment);
  CHECK(point);
}

TEST_CASE("enumeration on a fully solvent pair") {
  const std::vector<ClearingPolytope> polys = enumerate_clearing_vectors(cycle(1.0), vec({1, 1}));
  REQUIRE(polys.size() == 1);
  CHECK(polys[0].y == std::vector<int>{1, 1});
  CHECK(polys[0].contains(vec({1, 1}), 1e-9));
}

TEST_CASE("enumeration matches a brute-force p-grid") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 4; ++trial) {
    const FinancialNetwork net = testing::random_network(rng, 3, 1.0, 3.0, 1.0);
    const Vector x = Vector::Zero(3);
    const std::vector<ClearingPolytope> polys = enumerate_clearing_vectors(net, x);
    const std::vector<Vector> pts = testing::brute_clearing_points(net, x, 21, 1e-9);
    CHECK(!pts.empty());
    for (const Vector& p : pts) {
      bool inside = false;
      for (const ClearingPolytope& poly : polys) inside = inside || poly.contains(p, 1e-6);
      CHECK(inside);
    }
  }
}

TEST_CASE("enumeration refuses large dimensions") {
  std::mt19937_64 rng(7);
  const FinancialNetwork net = testing::random_network(rng, kMaxEnumerationDim + 1);
  CHECK_THROWS_AS(enumerate_clearing_vectors(net, Vector::Zero(net.size())), CapacityError);
}
