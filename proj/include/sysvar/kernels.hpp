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

#ifndef SYSVAR_KERNELS_HPP_
#define SYSVAR_KERNELS_HPP_

#include <vector>

#include "sysvar/types.hpp"

// Scenario-level kernels. Each operation has an OpenMP version and a serial
// reference with identical results; the reference exists for testing.
namespace sysvar::kernels {

// A scenario violates the threshold when its aggregate is below alpha - kViolationSlack.
inline constexpr double kViolationSlack = 1e-9;

struct ViolationCount {
  bool nonnegative = true;  // x^n + B^T z >= 0 for every scenario
  int violations = 0;
};

// Aggregate Lambda(x^n + B^T z) per scenario; -inf where the shifted vector leaves R^d_+.
Vector aggregates(const FinancialNetwork& net, const Grouping& grouping,
                  const ScenarioSet& scenarios, const Vector& z);

ViolationCount count_violations(const FinancialNetwork& net, const Grouping& grouping,
                                const ScenarioSet& scenarios, const Vector& z, double alpha);

// Acceptance flag per row of `points` (each row a capital vector).
std::vector<char> classify(const FinancialNetwork& net, const Grouping& grouping,
                           const ScenarioSet& scenarios, const RiskSpec& spec,
                           const RowMatrix& points);

namespace serial {

Vector aggregates(const FinancialNetwork& net, const Grouping& grouping,
                  const ScenarioSet& scenarios, const Vector& z);

ViolationCount count_violations(const FinancialNetwork& net, const Grouping& grouping,
                                const ScenarioSet& scenarios, const Vector& z, double alpha);

std::vector<char> classify(const FinancialNetwork& net, const Grouping& grouping,
                           const ScenarioSet& scenarios, const RiskSpec& spec,
                           const RowMatrix& points);

}  // namespace serial

}  // namespace sysvar::kernels

#endif  // SYSVAR_KERNELS_HPP_
