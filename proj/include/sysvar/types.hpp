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

#ifndef SYSVAR_TYPES_HPP_
#define SYSVAR_TYPES_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace sysvar {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Eisenberg-Noe liability structure: relative liabilities `pi` (right
/// stochastic, zero diagonal) and total obligations `pbar` (strictly positive).
struct FinancialNetwork {
  Matrix pi;
  Vector pbar;

  int size() const { return static_cast<int>(pbar.size()); }
  double total_obligations() const { return pbar.sum(); }

  // Throws ValidationError when an invariant is broken.
  void validate() const;
};

/// Partition of the d institutions into g groups. Group j receives capital
/// z_j, injected into every member: (B^T z)_i = z_{assignment[i]}.
struct Grouping {
  int g = 0;
  std::vector<int> assignment;

  int size() const { return static_cast<int>(assignment.size()); }
  std::vector<int> group_sizes() const;
  std::vector<std::vector<int>> members() const;

  // Dense g x d grouping matrix B.
  Matrix matrix() const;

  // B^T z.
  Vector inject(const Vector& z) const;

  // B v (sum of member entries per group).
  Vector collect(const Vector& v) const;

  void validate() const;

  static Grouping single(int d);
  static Grouping singletons(int d);
};

/// N sampled operating cash-flow vectors, one per row.
struct ScenarioSet {
  RowMatrix values;

  int count() const { return static_cast<int>(values.rows()); }
  int dimension() const { return static_cast<int>(values.cols()); }
  Vector scenario(int n) const { return values.row(n).transpose(); }

  // First `n` scenarios.
  ScenarioSet head(int n) const;
};

/// Value-at-risk threshold and level.
struct RiskSpec {
  double alpha = 0.0;
  double lambda = 0.0;

  void validate() const;

  // Largest number of scenarios allowed to violate the threshold, floor(N*lambda).
  int max_violations(int scenario_count) const;
  // Smallest number of scenarios that must meet the threshold.
  int required_successes(int scenario_count) const {
    return scenario_count - max_violations(scenario_count);
  }
};

/// Search box [z_lo, z_hi] for group capital.
struct CapitalBox {
  Vector lo;
  Vector hi;

  int dimension() const { return static_cast<int>(lo.size()); }
};

}  // namespace sysvar

#endif  // SYSVAR_TYPES_HPP_
