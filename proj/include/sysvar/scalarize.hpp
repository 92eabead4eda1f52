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

#ifndef SYSVAR_SCALARIZE_HPP_
#define SYSVAR_SCALARIZE_HPP_

#include <string>

#include "sysvar/mip.hpp"
#include "sysvar/types.hpp"

namespace sysvar {

// Everything a scalarization needs about one SAA instance.
struct Instance {
  const FinancialNetwork& net;
  const Grouping& grouping;
  const ScenarioSet& scenarios;
  RiskSpec spec;
};

void validate(const Instance& inst);

// z_lo_j = -min over scenarios n and members i of group j of x^n_i;
// z_hi_j = max over members i of group j of pbar_i.
CapitalBox z_bounds(const FinancialNetwork& net, const Grouping& grouping,
                    const ScenarioSet& scenarios);

// True when alpha exceeds total obligations, which leaves the risk set empty.
bool provably_infeasible(const Instance& inst);

struct ScalarResult {
  bool feasible = false;
  bool optimal = false;
  double value = 0.0;  // w^T z* or the distance
  double bound = 0.0;  // certified lower bound on value
  Vector z;
  long nodes = 0;
};

ScalarResult weighted_sum(const Instance& inst, const Vector& w,
                          const optim::MipOptions& options = {});

ScalarResult norm_min(const Instance& inst, const Vector& v,
                      const optim::MipOptions& options = {});

enum class IdealMethod { kAuto, kMilp, kBisection };

IdealMethod parse_ideal_method(const std::string& name);

struct IdealPoint {
  bool feasible = false;
  Vector z;
};

// Componentwise minimum of the risk set. kAuto uses the MILP while the
// relaxation stays small (N(d+1) <= kAutoMilpLimit) and bisection otherwise.
inline constexpr int kAutoMilpLimit = 400;
IdealPoint ideal_point(const Instance& inst, IdealMethod method = IdealMethod::kAuto);

struct BisectionResult {
  bool feasible = false;
  double value = 0.0;
  int evaluations = 0;
};

// Smallest t in [z_lo_j, z_hi_j] with t e_j + sum_{k != j} z_hi_k e_k acceptable.
BisectionResult bisection_unit(const Instance& inst, int j, double tol = 1e-6);

}  // namespace sysvar

#endif  // SYSVAR_SCALARIZE_HPP_
