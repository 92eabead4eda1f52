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

#ifndef SYSVAR_TESTS_ORACLES_HPP_
#define SYSVAR_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sysvar/clearing.hpp"
#include "sysvar/saa.hpp"
#include "sysvar/scalarize.hpp"
#include "sysvar/types.hpp"

namespace sysvar::testing {

// Random row-stochastic network; every row has at least one off-diagonal entry.
FinancialNetwork random_network(std::mt19937_64& rng, int d, double pbar_lo = 1.0,
                                double pbar_hi = 10.0, double density = 0.6);

// Random partition of d institutions into g nonempty groups.
Grouping random_grouping(std::mt19937_64& rng, int d, int g);

// N scenarios with independent exponential entries of the given mean.
ScenarioSet random_scenarios(std::mt19937_64& rng, int n, int d, double mean);

struct Toy {
  FinancialNetwork net;
  Grouping grouping;
  ScenarioSet scenarios;
  RiskSpec spec;

  Instance instance() const { return Instance{net, grouping, scenarios, spec}; }
};

// alpha = alpha_frac * total obligations.
Toy random_toy(std::uint64_t seed, int d, int g, int n, double alpha_frac = 0.8,
               double lambda = 0.25);

// Minimum of w^T z over scenario subsets of the required size, each solved as one LP.
struct SubsetOracle {
  bool feasible = false;
  double value = 0.0;
};
SubsetOracle subset_enumeration(const Instance& inst, const Vector& w);

// Membership decided with the clearing LP instead of the fixed-point engine.
bool lp_membership(const Instance& inst, const Vector& z);

// g = 2 only: distance from v to the SAA set by scanning z1 on a grid of the
// given step and bisecting the smallest acceptable z2 in each column.
double column_scan_distance(const Instance& inst, const Vector& v, double step);

// Clearing vectors on a uniform p-grid with `per_axis` points per coordinate.
std::vector<Vector> brute_clearing_points(const FinancialNetwork& net, const Vector& x,
                                          int per_axis, double tol);

// inf{y on a grid of the given step : #{a_n + y < alpha} <= floor(lambda N)}.
double brute_insensitive(const Vector& aggregates, const RiskSpec& spec, double lo, double hi,
                         double step);

}  // namespace sysvar::testing

#endif  // SYSVAR_TESTS_ORACLES_HPP_
