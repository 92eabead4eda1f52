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

#ifndef SYSVAR_OPTIM_LP_HPP_
#define SYSVAR_OPTIM_LP_HPP_

#include <limits>
#include <string>

#include "sysvar/types.hpp"

namespace sysvar::optim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };

/// optimize c^T v  subject to  A v <= b,  lower <= v <= upper.
/// Bounds may be infinite.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  Vector objective;
  RowMatrix a;
  Vector b;
  Vector lower;
  Vector upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(b.size()); }

  // Zero-row program with v in [lower, upper].
  static LinearProgram with_bounds(Sense sense, Vector objective, Vector lower, Vector upper);
  void add_row(const Vector& coefficients, double rhs);
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus status);

/// Result of solve_lp. Row multipliers are nonnegative for the "<=" rows.
/// With y = row_duals for a maximization and y = -row_duals for a
/// minimization, reduced_costs = c - A^T y and, at an optimum,
///   objective = b^T y + reduced_costs^T x,
/// where reduced costs vanish except at active variable bounds.
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;
  double objective = 0.0;
  Vector row_duals;
  Vector reduced_costs;
  long iterations = 0;
  double primal_residual = 0.0;  // max violation of rows and bounds
};

struct SimplexOptions {
  long iteration_limit = 1'000'000;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-11;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_streak = 50;
  // Pivots between refactorizations of the basis.
  int refactor_interval = 100;
};

/// Bounded-variable primal simplex on a dense tableau (two phases). Throws
/// SolverError when the iteration limit is reached.
LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace sysvar::optim

#endif  // SYSVAR_OPTIM_LP_HPP_
