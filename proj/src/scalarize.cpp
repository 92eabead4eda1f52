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

#include "sysvar/scalarize.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/kernels.hpp"
#include "sysvar/parallel.hpp"

namespace sysvar {
namespace {

bool member(const Instance& inst, const Vector& z) {
  const kernels::ViolationCount c = kernels::count_violations(
      inst.net, inst.grouping, inst.scenarios, z, inst.spec.alpha);
  return c.nonnegative && c.violations <= inst.spec.max_violations(inst.scenarios.count());
}

ScalarResult from_mip(const optim::MipSolution& sol) {
  ScalarResult out;
  out.feasible = sol.feasible;
  out.optimal = sol.optimal;
  out.value = sol.objective;
  out.bound = sol.bound;
  out.z = sol.z;
  out.nodes = sol.nodes;
  return out;
}

}  // namespace

void validate(const Instance& inst) {
  inst.net.validate();
  inst.grouping.validate();
  inst.spec.validate();
  if (inst.grouping.size() != inst.net.size()) throw ValidationError("grouping size mismatch");
  if (inst.scenarios.dimension() != inst.net.size()) {
    throw ValidationError("scenario dimension mismatch");
  }
  if (inst.scenarios.count() < 1) throw ValidationError("at least one scenario is required");
  if ((inst.scenarios.values.array() < 0.0).any()) {
    throw ValidationError("scenarios must be nonnegative");
  }
}

CapitalBox z_bounds(const FinancialNetwork& net, const Grouping& grouping,
                    const ScenarioSet& scenarios) {
  const int g = grouping.g;
  CapitalBox box{Vector::Constant(g, std::numeric_limits<double>::infinity()),
                 Vector::Constant(g, -std::numeric_limits<double>::infinity())};
  for (int i = 0; i < grouping.size(); ++i) {
    const int j = grouping.assignment[i];
    box.hi(j) = std::max(box.hi(j), net.pbar(i));
    for (int n = 0; n < scenarios.count(); ++n) {
      box.lo(j) = std::min(box.lo(j), scenarios.values(n, i));
    }
  }
  box.lo = -box.lo;
  return box;
}

bool provably_infeasible(const Instance& inst) {
  return inst.spec.alpha > inst.net.total_obligations();
}

ScalarResult weighted_sum(const Instance& inst, const Vector& w,
                          const optim::MipOptions& options) {
  validate(inst);
  if (provably_infeasible(inst)) return {};
  const optim::ScenarioMip model{inst.net, inst.grouping, inst.scenarios, inst.spec,
                                 optim::MipObjective::linear(w),
                                 z_bounds(inst.net, inst.grouping, inst.scenarios)};
  return from_mip(optim::branch_and_bound(model, options));
}

ScalarResult norm_min(const Instance& inst, const Vector& v, const optim::MipOptions& options) {
  validate(inst);
  if (v.size() != inst.grouping.g) throw ValidationError("point size must equal group count");
  if (provably_infeasible(inst)) return {};
  if (member(inst, v)) {
    ScalarResult out;
    out.feasible = true;
    out.optimal = true;
    out.z = v;
    return out;
  }
  const optim::ScenarioMip model{inst.net, inst.grouping, inst.scenarios, inst.spec,
                                 optim::MipObjective::quadratic(v),
                                 z_bounds(inst.net, inst.grouping, inst.scenarios)};
  return from_mip(optim::branch_and_bound(model, options));
}

IdealMethod parse_ideal_method(const std::string& name) {
  if (name == "auto") return IdealMethod::kAuto;
  if (name == "milp") return IdealMethod::kMilp;
  if (name == "bisection") return IdealMethod::kBisection;
  throw ValidationError("unknown ideal-point method '" + name + "'");
}

IdealPoint ideal_point(const Instance& inst, IdealMethod method) {
  validate(inst);
  IdealPoint out;
  if (provably_infeasible(inst)) return out;
  const int g = inst.grouping.g;
  if (method == IdealMethod::kAuto) {
    const long size = static_cast<long>(inst.scenarios.count()) * (inst.net.size() + 1);
    method = size <= kAutoMilpLimit ? IdealMethod::kMilp : IdealMethod::kBisection;
  }
  out.z = Vector::Zero(g);
  std::vector<char> ok(static_cast<std::size_t>(g), 0);
  ExceptionSlot slot;
#pragma omp parallel for schedule(static, 1) num_threads(thread_count()) if (g > 1)
  for (int j = 0; j < g; ++j) {
    slot.run([&] {
      if (method == IdealMethod::kMilp) {
        const ScalarResult r = weighted_sum(inst, Vector::Unit(g, j));
        ok[j] = r.feasible;
        out.z(j) = r.value;
      } else {
        const BisectionResult r = bisection_unit(inst, j);
        ok[j] = r.feasible;
        out.z(j) = r.value;
      }
    });
  }
  slot.rethrow();
  out.feasible = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return out;
}

BisectionResult bisection_unit(const Instance& inst, int j, double tol) {
  validate(inst);
  if (j < 0 || j >= inst.grouping.g) throw ValidationError("group index out of range");
  BisectionResult out;
  if (provably_infeasible(inst)) return out;
  const CapitalBox box = z_bounds(inst.net, inst.grouping, inst.scenarios);
  Vector z = box.hi;
  auto probe = [&](double t) {
    z(j) = t;
    ++out.evaluations;
    return member(inst, z);
  };
  double lo = box.lo(j);
  double hi = box.hi(j);
  if (!probe(hi)) return out;
  out.feasible = true;
  if (probe(lo)) {
    out.value = lo;
    return out;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (probe(mid)) hi = mid;
    else lo = mid;
  }
  out.value = hi;
  return out;
}

}  // namespace sysvar
