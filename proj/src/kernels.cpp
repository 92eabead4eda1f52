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

#include "sysvar/kernels.hpp"

#include <limits>

#include "sysvar/clearing.hpp"
#include "sysvar/errors.hpp"
#include "sysvar/parallel.hpp"

namespace sysvar::kernels {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check(const FinancialNetwork& net, const Grouping& grouping, const ScenarioSet& scenarios,
           int z_size) {
  if (grouping.size() != net.size() || scenarios.dimension() != net.size()) {
    throw ValidationError("network, grouping and scenarios disagree on dimension");
  }
  if (z_size != grouping.g) throw ValidationError("capital vector size must equal group count");
}

double scenario_aggregate(const FinancialNetwork& net, const ScenarioSet& scenarios,
                          const Vector& shift, int n) {
  const Vector x = scenarios.values.row(n).transpose() + shift;
  if ((x.array() < 0.0).any()) return kNegInf;
  return clearing::clearing_fixed_point(net, x).total_payment;
}

ViolationCount tally(const Vector& agg, double alpha) {
  ViolationCount out;
  for (int n = 0; n < agg.size(); ++n) {
    if (agg(n) == kNegInf) out.nonnegative = false;
    if (agg(n) < alpha - kViolationSlack) ++out.violations;
  }
  return out;
}

bool accepted(const ViolationCount& c, const RiskSpec& spec, int count) {
  return c.nonnegative && c.violations <= spec.max_violations(count);
}

}  // namespace

Vector aggregates(const FinancialNetwork& net, const Grouping& grouping,
                  const ScenarioSet& scenarios, const Vector& z) {
  check(net, grouping, scenarios, static_cast<int>(z.size()));
  const Vector shift = grouping.inject(z);
  const int count = scenarios.count();
  Vector out(count);
  ExceptionSlot slot;
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (count > 1)
  for (int n = 0; n < count; ++n) {
    slot.run([&] { out(n) = scenario_aggregate(net, scenarios, shift, n); });
  }
  slot.rethrow();
  return out;
}

ViolationCount count_violations(const FinancialNetwork& net, const Grouping& grouping,
                                const ScenarioSet& scenarios, const Vector& z, double alpha) {
  return tally(aggregates(net, grouping, scenarios, z), alpha);
}

std::vector<char> classify(const FinancialNetwork& net, const Grouping& grouping,
                           const ScenarioSet& scenarios, const RiskSpec& spec,
                           const RowMatrix& points) {
  check(net, grouping, scenarios, static_cast<int>(points.cols()));
  const int count = static_cast<int>(points.rows());
  std::vector<char> out(static_cast<std::size_t>(count), 0);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count()) if (count > 1)
  for (int k = 0; k < count; ++k) {
    slot.run([&] {
      const Vector agg =
          serial::aggregates(net, grouping, scenarios, points.row(k).transpose());
      out[k] = accepted(tally(agg, spec.alpha), spec, scenarios.count()) ? 1 : 0;
    });
  }
  slot.rethrow();
  return out;
}

namespace serial {

Vector aggregates(const FinancialNetwork& net, const Grouping& grouping,
                  const ScenarioSet& scenarios, const Vector& z) {
  check(net, grouping, scenarios, static_cast<int>(z.size()));
  const Vector shift = grouping.inject(z);
  Vector out(scenarios.count());
  for (int n = 0; n < scenarios.count(); ++n) {
    out(n) = scenario_aggregate(net, scenarios, shift, n);
  }
  return out;
}

ViolationCount count_violations(const FinancialNetwork& net, const Grouping& grouping,
                                const ScenarioSet& scenarios, const Vector& z, double alpha) {
  return tally(aggregates(net, grouping, scenarios, z), alpha);
}

std::vector<char> classify(const FinancialNetwork& net, const Grouping& grouping,
                           const ScenarioSet& scenarios, const RiskSpec& spec,
                           const RowMatrix& points) {
  check(net, grouping, scenarios, static_cast<int>(points.cols()));
  std::vector<char> out(static_cast<std::size_t>(points.rows()), 0);
  for (int k = 0; k < points.rows(); ++k) {
    const Vector agg = aggregates(net, grouping, scenarios, points.row(k).transpose());
    out[k] = accepted(tally(agg, spec.alpha), spec, scenarios.count()) ? 1 : 0;
  }
  return out;
}

}  // namespace serial

}  // namespace sysvar::kernels
