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

#ifndef SYSVAR_CLEARING_HPP_
#define SYSVAR_CLEARING_HPP_

#include <vector>

#include "sysvar/types.hpp"

namespace sysvar::clearing {

// p_i < pbar_i - kDefaultTol marks institution i as defaulting.
inline constexpr double kDefaultTol = 1e-9;

struct ClearingResult {
  Vector p;
  std::vector<bool> defaults;
  int iterations = 0;
  double total_payment = 0.0;
};

/// Greatest clearing vector by the fictitious default algorithm: starting from
/// full payment, the default set grows until it is stable and the payments
/// of defaulting institutions solve the induced linear system. Falls back to
/// plain iteration of p <- (pi^T p + x) ^ pbar if that system is singular.
/// Throws DomainError if x has a negative entry.
ClearingResult clearing_fixed_point(const FinancialNetwork& net, const Vector& x);

/// Maximizes weights^T p over {p <= pi^T p + x, 0 <= p <= pbar}. Every optimum
/// is a clearing vector when the weights are strictly positive.
ClearingResult clearing_lp(const FinancialNetwork& net, const Vector& x, const Vector& weights);

/// Total payment of the greatest clearing vector; -inf outside R^d_+.
double aggregate_en(const FinancialNetwork& net, const Vector& x);

/// The limited-liability multipliers of an optimal dual of the clearing LP.
/// Satisfies aggregate_en(x') <= aggregate_en(x) + mu^T (x' - x) for x' >= 0.
Vector en_supergradient(const FinancialNetwork& net, const Vector& x);

// Limited liability and absolute priority, both within `tol`.
bool is_clearing_vector(const FinancialNetwork& net, const Vector& x, const Vector& p,
                        double tol);

/// Face of the set of all clearing vectors with a fixed default pattern.
/// `a_ub p <= b_ub` is the raw mixed-integer system with y fixed (limited
/// liability, p >= pbar*y, p >= x + pi^T p - Q*y, 0 <= p <= pbar); `a_eq p =
/// b_eq` lists the equalities it implies (full payment where y_i = 1, paying
/// out all assets where y_i = 0).
struct ClearingPolytope {
  std::vector<int> y;
  Matrix a_eq;
  Vector b_eq;
  Matrix a_ub;
  Vector b_ub;

  bool contains(const Vector& p, double tol) const;
};

inline constexpr int kMaxEnumerationDim = 12;

// Constraint system for one pattern, feasible or not.
ClearingPolytope clearing_polytope(const FinancialNetwork& net, const Vector& x,
                                   const std::vector<int>& y);

/// All nonempty faces over y in {0,1}^d; their union is the set of clearing
/// vectors. Throws CapacityError above kMaxEnumerationDim.
std::vector<ClearingPolytope> enumerate_clearing_vectors(const FinancialNetwork& net,
                                                         const Vector& x);

}  // namespace sysvar::clearing

#endif  // SYSVAR_CLEARING_HPP_
