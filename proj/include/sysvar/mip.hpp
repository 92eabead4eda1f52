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

#ifndef SYSVAR_OPTIM_MIP_HPP_
#define SYSVAR_OPTIM_MIP_HPP_

#include <vector>

#include "sysvar/types.hpp"

namespace sysvar::optim {

enum class ObjectiveKind { kLinear, kQuadratic };

struct MipObjective {
  ObjectiveKind kind = ObjectiveKind::kLinear;
  Vector weights;  // linear: minimize w^T z
  Vector center;   // quadratic: minimize |v - z|_2

  static MipObjective linear(Vector w) { return {ObjectiveKind::kLinear, std::move(w), {}}; }
  static MipObjective quadratic(Vector v) { return {ObjectiveKind::kQuadratic, {}, std::move(v)}; }
};

// Chance-constrained capital allocation over a finite scenario sample: z in
// the box, x^n + B^T z >= 0 for all n, and at most floor(lambda N) scenarios
// with aggregate below alpha.
struct ScenarioMip {
  const FinancialNetwork& net;
  const Grouping& grouping;
  const ScenarioSet& scenarios;
  RiskSpec spec;
  MipObjective objective;
  CapitalBox box;
};

struct MipOptions {
  long node_budget = 100'000;
  double gap_tol = 1e-6;
  // Bound linear objectives with the LP relaxation over (z, p, y) instead of
  // the supergradient cut model.
  bool lp_relaxation = false;
};

struct MipSolution {
  bool feasible = false;
  bool optimal = false;  // false when the node budget ran out
  Vector z;
  double objective = 0.0;  // w^T z, or the distance |v - z| for the quadratic kind
  double bound = 0.0;      // proven lower bound on the optimum
  double gap = 0.0;
  std::vector<int> y;      // 1 where the scenario meets the threshold at z
  long nodes = 0;
  std::vector<double> incumbent_trace;
};

void validate(const ScenarioMip& model);

// Linear objectives branch on the scenario binaries of the LP relaxation in
// (z, p^1..p^N, y). Quadratic objectives branch on scenario subsets and bound
// each node by the exact projection onto the intersection of the required
// scenario sets, built from supergradient cuts. The quadratic search box is
// widened to max(hi, v) so the distance is the one to the full upper set.
MipSolution branch_and_bound(const ScenarioMip& model, const MipOptions& options = {});

}  // namespace sysvar::optim

#endif  // SYSVAR_OPTIM_MIP_HPP_
