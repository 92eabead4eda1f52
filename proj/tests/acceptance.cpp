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
// Acceptance runner: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sysvar/clearing.hpp"
#include "sysvar/convergence.hpp"
#include "sysvar/errors.hpp"
#include "sysvar/io.hpp"
#include "sysvar/kernels.hpp"
#include "sysvar/lp.hpp"
#include "sysvar/netgen.hpp"
#include "sysvar/saa.hpp"
#include "sysvar/scalarize.hpp"
#include "sysvar/shocks.hpp"

#ifndef SYSVAR_BIN
#define SYSVAR_BIN "sysvar"
#endif

namespace {

using namespace sysvar;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// ---- 1: clearing equivalence ----------------------------------------------

void clearing_equivalence(Outcome& out) {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int d = std::vector<int>{5, 10, 20}[k % 3];
    const FinancialNetwork net = testing::random_network(rng, d);
    std::exponential_distribution<double> e(1.0 / 3.0);
    Vector x(d);
    for (int i = 0; i < d; ++i) x(i) = e(rng);
    const Vector fp = clearing::clearing_fixed_point(net, x).p;
    const Vector lp = clearing::clearing_lp(net, x, Vector::Ones(d)).p;
    worst = std::max(worst, max_abs(fp - lp));
  }
  out.expect(worst <= 1e-7, "fixed point and LP differ by " + std::to_string(worst));
  out.detail << "max deviation " << worst;
}

// ---- 2: aggregation boundary --------------------------------------------

void aggregation_boundary(Outcome& out) {
  std::mt19937_64 rng(202);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int d = 3 + k % 8;
    const int g = 1 + k % std::min(d, 3);
    const FinancialNetwork net = testing::random_network(rng, d);
    const Grouping grouping = testing::random_grouping(rng, d, g);
    const ScenarioSet sc = testing::random_scenarios(rng, 1, d, 2.0);
    const Vector hi = z_bounds(net, grouping, sc).hi;
    const double agg = clearing::aggregate_en(net, sc.scenario(0) + grouping.inject(hi));
    worst = std::max(worst, std::abs(agg - net.total_obligations()));
  }
  out.expect(worst <= 1e-9, "aggregate at the upper bound is off by " + std::to_string(worst));
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    testing::Toy t = testing::random_toy(seed, 4, 2, 5);
    const double total = t.net.total_obligations();
    t.spec.alpha = total + 1e-3;
    out.expect(!weighted_sum(t.instance(), Vector::Ones(2)).feasible, "feasible above total");
    t.spec.alpha = total - 1e-3;
    out.expect(weighted_sum(t.instance(), Vector::Ones(2)).feasible, "infeasible below total");
    ++checked;
  }
  out.detail << "max deviation " << worst << ", " << checked << " threshold pairs";
}

// ---- 3: enumeration of all clearing vectors -------------------------------

std::vector<Vector> polytope_vertices(const clearing::ClearingPolytope& poly, const Vector& pbar,
                                      std::mt19937_64& rng) {
  const int d = static_cast<int>(pbar.size());
  std::vector<Vector> out;
  std::normal_distribution<double> n01;
  for (int k = 0; k < 2 * d + 12; ++k) {
    Vector c(d);
    if (k < 2 * d) c = (k % 2 ? -1.0 : 1.0) * Vector::Unit(d, k / 2);
    else for (int i = 0; i < d; ++i) c(i) = n01(rng);
    optim::LinearProgram lp =
        optim::LinearProgram::with_bounds(optim::Sense::kMinimize, c, Vector::Zero(d), pbar);
    lp.a = RowMatrix(poly.a_ub.topRows(3 * d));
    lp.b = poly.b_ub.head(3 * d);
    const optim::LpResult r = optim::solve_lp(lp);
    if (r.status == optim::LpStatus::kOptimal) out.push_back(r.x);
  }
  return out;
}

void enumeration(Outcome& out) {
  // Two-bank cycle without outside cash.
  {
    FinancialNetwork net;
    net.pi = Matrix(2, 2);
    net.pi << 0, 1, 1, 0;
    net.pbar = Vector::Constant(2, 2.0);
    const Vector x = Vector::Zero(2);
    const auto polys = clearing::enumerate_clearing_vectors(net, x);
    std::mt19937_64 rng(3);
    double lo = std::numeric_limits<double>::infinity(), hi = -std::numeric_limits<double>::infinity();
    for (const auto& poly : polys) {
      for (const Vector& v : polytope_vertices(poly, net.pbar, rng)) {
        out.expect(std::abs(v(0) - v(1)) <= 1e-9, "cycle polytope leaves the diagonal");
        lo = std::min(lo, v(0));
        hi = std::max(hi, v(0));
      }
    }
    out.expect(lo <= 1e-12 && hi >= 2.0 - 1e-12, "cycle union does not span [0,2]");
    bool seg = false, pt = false;
    for (const auto& poly : polys) {
      seg = seg || poly.y == std::vector<int>{0, 0};
      pt = pt || poly.y == std::vector<int>{1, 1};
    }
    out.expect(seg && pt, "cycle patterns (0,0) and (1,1) missing");
    // Mixed patterns may only add the full-payment point.
    for (const auto& poly : polys) {
      if (poly.y[0] == poly.y[1]) continue;
      for (const Vector& v : polytope_vertices(poly, net.pbar, rng)) {
        out.expect(max_abs(v - net.pbar) <= 1e-9, "mixed pattern beyond the full-payment point");
      }
    }
    for (int k = 0; k <= 20; ++k) {
      Vector p = Vector::Constant(2, 0.1 * k);
      bool in = false;
      for (const auto& poly : polys) in = in || poly.contains(p, 1e-9);
      out.expect(in, "diagonal point outside the union");
      p(1) += 0.05;
      bool off = false;
      for (const auto& poly : polys) off = off || poly.contains(p, 1e-9);
      out.expect(!off, "off-diagonal point inside the union");
    }
  }

  // Random three-bank networks on a 50^3 payment grid.
  std::mt19937_64 rng(303);
  const int per_axis = 50;
  long grid_hits = 0, vertices = 0;
  for (int net_id = 0; net_id < 20; ++net_id) {
    FinancialNetwork net = testing::random_network(rng, 3, 1.0, 5.0);
    // Grid-aligned obligations and cash flows make clearing vectors land on grid points.
    for (int i = 0; i < 3; ++i) net.pbar(i) = std::round(net.pbar(i)) * (per_axis - 1) / 49.0;
    Vector x = Vector::Zero(3);
    if (net_id % 2 == 1) {
      Vector q(3);
      for (int i = 0; i < 3; ++i) q(i) = net.pbar(i) * static_cast<double>(rng() % per_axis) / (per_axis - 1);
      const Vector inflow = net.pi.transpose() * q;
      for (int i = 0; i < 3; ++i) x(i) = std::max(0.0, q(i) - inflow(i));
    }
    const auto polys = clearing::enumerate_clearing_vectors(net, x);
    const std::vector<Vector> points = testing::brute_clearing_points(net, x, per_axis, 1e-6);
    for (const Vector& p : points) {
      bool in = false;
      for (const auto& poly : polys) in = in || poly.contains(p, 1e-6);
      out.expect(in, "grid clearing vector outside every polytope");
    }
    grid_hits += static_cast<long>(points.size());
    for (const auto& poly : polys) {
      for (const Vector& v : polytope_vertices(poly, net.pbar, rng)) {
        out.expect(clearing::is_clearing_vector(net, x, v, 1e-6), "polytope vertex is not clearing");
        ++vertices;
      }
    }
    // Grid points inside an emitted polytope are clearing vectors.
    std::vector<int> k(3, 0);
    Vector p(3);
    for (;;) {
      for (int i = 0; i < 3; ++i) p(i) = net.pbar(i) * k[i] / (per_axis - 1);
      bool in = false;
      for (const auto& poly : polys) in = in || poly.contains(p, 1e-9);
      if (in) out.expect(clearing::is_clearing_vector(net, x, p, 1e-6), "grid point in polytope is not clearing");
      int i = 0;
      while (i < 3 && ++k[i] == per_axis) k[i++] = 0;
      if (i == 3) break;
    }
  }
  out.detail << grid_hits << " grid clearing vectors, " << vertices << " polytope vertices";
}

// ---- 4: weighted-sum MILP -----------------------------------------------

void milp(Outcome& out) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d = 3 + k % 6;
    const int g = 1 + k % std::min(3, d);
    const int n = 4 + k % 5;
    const testing::Toy t = testing::random_toy(500 + k, d, g, n, 0.8, 0.3);
    Vector w(g);
    for (int j = 0; j < g; ++j) w(j) = u(rng);
    const ScalarResult r = weighted_sum(t.instance(), w);
    const testing::SubsetOracle ref = testing::subset_enumeration(t.instance(), w);
    out.expect(r.feasible == ref.feasible, "feasibility disagrees with the subset oracle");
    if (!ref.feasible || !r.feasible) continue;
    out.expect(r.optimal, "node budget exhausted");
    const double err = std::abs(r.value - ref.value) / std::max(1.0, std::abs(ref.value));
    worst = std::max(worst, err);
  }
  out.expect(worst <= 1e-6, "weighted sum differs from the subset oracle by " + std::to_string(worst));
  double worst_unit = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d = 3 + k % 4;
    const int g = 1 + k % 2;
    const int n = 8 + (k % 13);
    const testing::Toy t = testing::random_toy(700 + k, d, g, n, 0.8, 0.2);
    const int j = k % g;
    const ScalarResult r = weighted_sum(t.instance(), Vector::Unit(g, j));
    const BisectionResult b = bisection_unit(t.instance(), j);
    out.expect(r.feasible == b.feasible, "unit weight feasibility disagrees with bisection");
    if (!r.feasible || !b.feasible) continue;
    out.expect(r.optimal, "node budget exhausted on a unit weight");
    worst_unit = std::max(worst_unit, std::abs(r.value - b.value));
  }
  out.expect(worst_unit <= 1e-5, "unit weight differs from bisection by " + std::to_string(worst_unit));
  out.detail << "oracle error " << worst << ", bisection error " << worst_unit;
}

// ---- 5: norm-minimizing MIQP --------------------------------------------

// Distance from v to the acceptable set by scanning z1 in steps of `step` near v and bisecting z2.
double scan_distance(const Instance& inst, const Vector& v, double radius, double step) {
  const CapitalBox box = z_bounds(inst.net, inst.grouping, inst.scenarios);
  const Vector hi = box.hi.cwiseMax(v);
  auto member = [&](double a, double b) {
    Vector z(2);
    z << a, b;
    return saa::membership(inst, z).accepted;
  };
  const double from = std::max(box.lo(0), v(0) - radius);
  const double to = std::min(hi(0), v(0) + radius);
  double best = std::numeric_limits<double>::infinity();
  const long count = static_cast<long>(std::ceil((to - from) / step));
  for (long s = 0; s <= count; ++s) {
    const double c = std::min(to, from + s * step);
    if (!member(c, hi(1))) continue;
    double lo = box.lo(1), up = hi(1);
    if (member(c, lo)) {
      up = lo;
    } else {
      while (up - lo > 1e-9) {
        const double mid = 0.5 * (lo + up);
        if (member(c, mid)) up = mid;
        else lo = mid;
      }
    }
    best = std::min(best, std::hypot(c - v(0), std::max(up, v(1)) - v(1)));
  }
  return best;
}

void miqp(Outcome& out) {
  double worst = 0.0;
  int probes = 0;
  for (int k = 0; k < 20; ++k) {
    const testing::Toy t = testing::random_toy(900 + k, 4, 2, 4 + k % 5, 0.8, 0.25);
    const Instance inst = t.instance();
    const CapitalBox box = z_bounds(t.net, t.grouping, t.scenarios);
    for (const Vector& v : {Vector(box.lo - Vector::Ones(2)), Vector(box.lo + 0.3 * (box.hi - box.lo))}) {
      if (saa::membership(inst, v).accepted) continue;
      const ScalarResult r = norm_min(inst, v);
      out.expect(r.feasible && r.optimal, "norm minimization did not finish");
      if (!r.feasible) continue;
      const double scan = scan_distance(inst, v, r.value + 2e-3, 1e-3);
      worst = std::max(worst, std::abs(scan - r.value));
      out.expect((r.z.array() >= v.array() - 1e-9).all(), "nearest point is not above the probe");
      out.expect(saa::membership(inst, r.z).accepted, "nearest point fails membership");
      ++probes;
    }
  }
  out.expect(worst <= 2e-3, "distance differs from the scan by " + std::to_string(worst));
  out.detail << probes << " probes, max scan deviation " << worst;
}

// ---- 6: grid algorithms -------------------------------------------------

void grid_algorithms(Outcome& out) {
  int instances = 0;
  for (int k = 0; k < 12; ++k) {
    const int g = k % 3 == 2 ? 3 : 2;
    const testing::Toy t = testing::random_toy(1100 + k, 5, g, 6 + k % 5, 0.8, 0.25);
    const Instance inst = t.instance();
    const CapitalBox box = z_bounds(t.net, t.grouping, t.scenarios);
    // Pick epsilon so the grid over the full box stays within 2,500 points.
    const double span = (box.hi - box.lo).maxCoeff();
    const double per_axis = g == 2 ? 45.0 : 12.0;
    const double eps = span / per_axis * std::sqrt(static_cast<double>(g));
    saa::AlgorithmOptions opts;
    const std::optional<saa::Grid> grid = saa::algorithm_grid(inst, eps, opts);
    if (!grid) continue;
    out.expect(grid->size() <= 2500, "toy grid larger than 2,500 points");
    const std::vector<signed char> labels = saa::classify_exhaustive(inst, *grid);
    const std::vector<Vector> expect = saa::minimal_points(*grid, labels);
    const long accepted = std::count(labels.begin(), labels.end(), 1);
    for (int a = 1; a <= 2; ++a) {
      const saa::ApproxSet set = a == 1 ? saa::algorithm1(inst, eps, opts) : saa::algorithm2(inst, eps, opts);
      out.expect(set.stats.accepted == accepted, "accepted count differs from exhaustive");
      bool same = set.generators.size() == expect.size();
      for (std::size_t i = 0; same && i < expect.size(); ++i) same = set.generators[i] == expect[i];
      out.expect(same, "generators differ from exhaustive classification");
    }
    ++instances;
  }

  std::mt19937_64 rng(606);
  const FinancialNetwork net = testing::random_network(rng, 10, 1.0, 5.0);
  const Grouping grouping = testing::random_grouping(rng, 10, 2);
  const ScenarioSet sc = testing::random_scenarios(rng, 50, 10, 1.0);
  const Instance inst{net, grouping, sc, RiskSpec{0.8 * net.total_obligations(), 0.1}};
  const double eps = 0.1;
  const saa::ApproxSet set = saa::algorithm1(inst, eps);
  out.expect(set.feasible && !set.generators.empty(), "large instance produced an empty set");
  for (const Vector& a : set.generators) {
    out.expect(saa::membership(inst, a).accepted, "generator fails membership");
  }
  const CapitalBox box = z_bounds(net, grouping, sc);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int members = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000;) {
    Vector z(2);
    for (int j = 0; j < 2; ++j) z(j) = box.lo(j) + u(rng) * (box.hi(j) - box.lo(j));
    if (!saa::membership(inst, z).accepted) continue;
    ++k;
    ++members;
    worst = std::max(worst, saa::distance_probe(z, set));
  }
  out.expect(worst <= eps, "member point farther than epsilon: " + std::to_string(worst));
  out.detail << instances << " toy instances, " << members << " member probes, max distance "
             << worst << " (eps " << eps << ")";
}

// ---- 7: risk-measure axioms ----------------------------------------------

void axioms(Outcome& out) {
  const testing::Toy t = testing::random_toy(1300, 6, 2, 20, 0.8, 0.2);
  const Instance inst = t.instance();
  const CapitalBox box = z_bounds(t.net, t.grouping, t.scenarios);
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int pairs = 0, violations = 0;
  while (pairs < 1000) {
    Vector z(2), w(2);
    for (int j = 0; j < 2; ++j) {
      z(j) = box.lo(j) + u(rng) * (box.hi(j) - box.lo(j));
      w(j) = u(rng);
    }
    if (!saa::membership(inst, z).accepted) continue;
    ++pairs;
    if (!saa::membership(inst, z + w).accepted) ++violations;
  }
  out.expect(violations == 0, std::to_string(violations) + " monotonicity violations");

  Vector shift(2);
  shift << 0.37, 0.81;
  testing::Toy s = t;
  for (int n = 0; n < s.scenarios.count(); ++n) {
    s.scenarios.values.row(n) += s.grouping.inject(shift).transpose();
  }
  saa::AlgorithmOptions o1, o2;
  o1.grid_box = box;
  o2.grid_box = CapitalBox{box.lo - shift, box.hi - shift};
  const saa::ApproxSet a = saa::algorithm1(inst, 0.1, o1);
  const saa::ApproxSet b = saa::algorithm1(s.instance(), 0.1, o2);
  bool same = a.generators.size() == b.generators.size();
  double worst = 0.0;
  for (std::size_t k = 0; same && k < a.generators.size(); ++k) {
    worst = std::max(worst, max_abs(a.generators[k] - (b.generators[k] + shift)));
  }
  out.expect(same && worst <= 1e-9, "shifted generators do not match");

  const saa::Grid grid(box.lo, box.hi, 0.1);
  const std::vector<signed char> labels = saa::classify_exhaustive(inst, grid);
  const std::vector<Vector> gens = saa::minimal_points(grid, labels);
  long mismatch = 0;
  for (long f = 0; f < grid.size(); ++f) {
    const Vector p = grid.point(f);
    bool dominated = false;
    for (const Vector& g : gens) dominated = dominated || (g.array() <= p.array()).all();
    if (dominated != (labels[f] == 1)) ++mismatch;
  }
  out.expect(mismatch == 0, "grid labels are not the upper closure of the generators");
  out.detail << pairs << " pairs, shift error " << worst << ", closure mismatches " << mismatch;
}

// ---- 8: insensitive value ------------------------------------------------

void insensitive(Outcome& out) {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(0.0, 20.0), l(0.01, 0.99);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng() % 60);
    Vector agg(n);
    for (int i = 0; i < n; ++i) agg(i) = u(rng);
    const RiskSpec spec{u(rng), l(rng)};
    const double r = saa::insensitive_saa(agg, spec);
    const double scan = testing::brute_insensitive(agg, spec, spec.alpha - agg.maxCoeff() - 1e-3, spec.alpha + 1.0, 5e-5);
    worst = std::max(worst, std::abs(scan - r));
    out.expect(spec.alpha - agg.maxCoeff() <= r && r <= spec.alpha - agg.minCoeff(),
               "value outside the two-sided bounds");
  }
  out.expect(worst <= 1e-4, "scan deviation " + std::to_string(worst));
  Vector ex(4);
  ex << 1, 2, 3, 4;
  out.expect(std::abs(saa::insensitive_saa(ex, RiskSpec{2.5, 0.25}) - 0.5) <= 1e-12, "worked example");
  out.detail << "max scan deviation " << worst;
}

// ---- 9: convergence trend ------------------------------------------------

void convergence(Outcome& out) {
  netgen::BollobasParams bp;
  bp.target_nodes = 10;
  bp.seed = 9;
  netgen::IntergroupLiabilityMatrix m{Matrix(2, 2)};
  m.m << 4, 2, 2, 1;
  const netgen::LiabilityStructure ls =
      netgen::build_liabilities(netgen::generate_bollobas(bp), 3, m);
  shocks::ShockParams p;
  p.nu = 3.0;
  p.beta_by_group = {4.0, 2.0};
  p.rho = 0.3;
  p.seed = 1000;
  saa::ConvergenceConfig cfg;
  cfg.sample_sizes = {25, 50, 100, 200};
  cfg.reference_size = 400;
  cfg.seeds = 10;
  cfg.epsilon = 0.01 * ls.network.pbar.maxCoeff();
  const RiskSpec spec{0.9 * ls.network.total_obligations(), 0.1};
  const saa::ConvergenceTable table =
      saa::convergence_study(ls.network, ls.grouping, p, spec, cfg);
  std::vector<double> medians;
  for (const saa::ConvergenceRow& row : table.rows) {
    if (row.median) medians.push_back(row.hausdorff_to_ref);
  }
  out.expect(medians.size() == 4, "missing median rows");
  for (std::size_t k = 1; k < medians.size(); ++k) {
    out.expect(medians[k] <= medians[k - 1], "median distance increased with N");
  }
  if (medians.size() == 4) {
    out.expect(medians[3] <= 0.8 * medians[0], "N=200 median is not 20% below the N=25 median");
  }
  out.detail << "medians";
  for (double v : medians) out.detail << " " << v;
  out.detail << " (eps " << cfg.epsilon << ")";
}

// ---- 10: samplers and generator ------------------------------------------

void samplers(Outcome& out) {
  netgen::BollobasParams bad;
  bad.theta = 0.5;
  bad.eta = 0.5;
  bad.zeta = 0.5;
  bool threw = false;
  try {
    bad.validate();
  } catch (const ValidationError&) {
    threw = true;
  }
  out.expect(threw, "theta + eta + zeta != 1 accepted");

  const double nu = 3.0, beta = 2.0;
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < n; ++k) {
    const double v = shocks::lomax_from_upper_tail(1.0 - u(rng), nu, beta);
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sq / n - mean * mean) / n);
  out.expect(std::abs(mean - beta / (nu - 1.0)) <= 3.0 * se, "Lomax mean off by more than 3 SE");

  {
    shocks::ShockParams sp;
    sp.nu = nu;
    sp.beta_by_group = {beta};
    sp.rho = 0.2;
    sp.count = n;
    sp.seed = 11;
    const ScenarioSet sc = shocks::sample_shocks(sp, Grouping::single(1));
    const double m1 = sc.values.col(0).mean();
    const double v1 = (sc.values.col(0).array() - m1).square().mean();
    out.expect(std::abs(m1 - beta / (nu - 1.0)) <= 3.0 * std::sqrt(v1 / n),
               "sampled shock mean off by more than 3 SE");
  }

  long rule_i = 0, steps = 0;
  const double theta = 0.3;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    netgen::BollobasParams bp;
    bp.theta = theta;
    bp.eta = 0.4;
    bp.zeta = 0.3;
    bp.target_nodes = 50;
    bp.seed = seed;
    const netgen::DirectedMultigraph g = netgen::generate_bollobas(bp);
    rule_i += g.rule_counts[0];
    steps += g.rule_counts[0] + g.rule_counts[1] + g.rule_counts[2];
  }
  const double freq = static_cast<double>(rule_i) / steps;
  out.expect(std::abs(freq - theta) <= 3.0 * std::sqrt(theta * (1.0 - theta) / steps),
             "rule (i) frequency outside 3 sigma");

  Matrix star = Matrix::Zero(3, 3);
  star(1, 0) = star(2, 0) = 1;
  const netgen::NetworkStats s = netgen::network_stats(star, Grouping{2, {0, 1, 1}});
  out.expect(s.cpi == 1.0, "star CPI");
  Matrix k4 = Matrix::Ones(4, 4) - Matrix::Identity(4, 4);
  const netgen::NetworkStats c = netgen::network_stats(k4, Grouping{2, {0, 0, 1, 1}});
  out.expect(std::abs(c.cpi - 5.0 / 6.0) <= 1e-15, "K4 CPI");
  out.detail << "Lomax mean " << mean << " (se " << se << "), rule (i) frequency " << freq;
}

// ---- 11: determinism -------------------------------------------------------

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

void determinism(Outcome& out) {
  const fs::path root = fs::temp_directory_path() / "sysvar_acceptance_determinism";
  fs::remove_all(root);
  const std::string bin = SYSVAR_BIN;
  struct Step {
    std::string name;
    std::string args;
    std::vector<std::string> files;
  };
  // {dir} expands to the run directory; inputs come from the first run.
  const std::vector<Step> steps = {
      {"gen-network",
       "gen-network --nodes 8 --core-size 3 --m 4,2,2,1 --seed 5 --out {dir}/net.json --edges {dir}/edges.csv",
       {"net.json", "edges.csv"}},
      {"sample-shocks", "sample-shocks --network {in}/net.json --beta 4,2 --rho 0.3 --n 20 --seed 2 --out {dir}/sc.csv",
       {"sc.csv"}},
      {"clear", "clear --network {in}/net.json --x {in}/sc.csv --out {dir}/clear.json", {"clear.json"}},
      {"clear-lp", "clear --network {in}/net.json --x {in}/sc.csv --method lp --out {dir}/clear_lp.json",
       {"clear_lp.json"}},
      {"enumerate", "enumerate --network {in}/net.json --x 1,0,2,0,1,0,0,3 --out {dir}/enum.json", {"enum.json"}},
      {"scalarize-w",
       "scalarize --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --weights 1,1 --out {dir}/ws.json",
       {"ws.json"}},
      {"scalarize-v",
       "scalarize --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --point 0,0 --out {dir}/nm.json",
       {"nm.json"}},
      {"scalarize-ideal",
       "scalarize --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --ideal --out {dir}/ideal.json",
       {"ideal.json"}},
      {"saa-1",
       "saa --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --epsilon 0.5 --out {dir}/saa1.json",
       {"saa1.json"}},
      {"saa-2",
       "saa --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --epsilon 0.5 --algo 2 --out {dir}/saa2.json",
       {"saa2.json"}},
      {"converge",
       "converge --network {in}/net.json --beta 4,2 --rho 0.3 --seed 3 --alpha-frac 0.9 --lambda 0.2 --epsilon 0.5 --n-list 10,20 --n-ref 40 --seeds 3 --out {dir}/conv.csv",
       {"conv.csv"}},
      {"stats",
       "stats --network {in}/net.json --scenarios {in}/sc.csv --alpha-frac 0.9 --lambda 0.2 --out {dir}/stats.json",
       {"stats.json"}},
      {"plotdata", "plotdata --in {in}/saa1.json --out {dir}/stairs.csv", {"stairs.csv"}},
  };
  const std::vector<std::string> runs = {"a", "b", "c"};
  const std::vector<int> threads = {1, 1, 4};
  auto expand = [](std::string s, const std::string& dir, const std::string& in) {
    for (auto [key, value] : {std::pair<std::string, std::string>{"{dir}", dir}, {"{in}", in}}) {
      for (std::size_t pos; (pos = s.find(key)) != std::string::npos;) s.replace(pos, key.size(), value);
    }
    return s;
  };
  const std::string first = (root / "a").string();
  int compared = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const std::string dir = (root / runs[r]).string();
    fs::create_directories(dir);
    for (const Step& step : steps) {
      const std::string cmd = "env -u SYSVAR_THREADS " + bin + " --threads " + std::to_string(threads[r]) +
                              " " + expand(step.args, dir, first) + " > /dev/null 2>&1";
      const int rc = shell(cmd);
      out.expect(rc == 0, step.name + " exited with " + std::to_string(rc));
    }
  }
  for (const Step& step : steps) {
    for (const std::string& f : step.files) {
      const std::string ref = io::read_file((root / "a" / f).string());
      for (std::size_t r = 1; r < runs.size(); ++r) {
        const std::string other = io::read_file((root / runs[r] / f).string());
        out.expect(ref == other, f + " differs between runs");
        ++compared;
      }
    }
  }
  fs::remove_all(root);
  out.detail << compared << " artifact comparisons (threads 1, 1, 4)";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"clearing equivalence", clearing_equivalence},
      {"aggregation boundary", aggregation_boundary},
      {"clearing vector enumeration", enumeration},
      {"weighted-sum MILP", milp},
      {"norm-minimizing MIQP", miqp},
      {"grid algorithms", grid_algorithms},
      {"risk-measure axioms", axioms},
      {"insensitive value", insensitive},
      {"convergence trend", convergence},
      {"samplers and generator", samplers},
      {"determinism", determinism},
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-30s %s  %.1fs  %s\n", id, criteria[k].first.c_str(),
                out.pass ? "PASS" : "FAIL", secs, out.detail.str().c_str());
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
