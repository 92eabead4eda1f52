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

#include "sysvar/clearing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/lp.hpp"

namespace sysvar::clearing {
namespace {

void check_cash_flow(const FinancialNetwork& net, const Vector& x) {
  if (x.size() != net.size()) {
    throw ValidationError("cash-flow vector has " + std::to_string(x.size()) +
                          " entries, network has " + std::to_string(net.size()));
  }
  for (int i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x(i))) throw ValidationError("cash flow must be finite");
    if (x(i) < 0.0) {
      throw DomainError("cash flow x[" + std::to_string(i) + "] is negative");
    }
  }
}

// Iterates p <- (pi^T p + x) ^ pbar from p until the update stalls.
int picard(const FinancialNetwork& net, const Vector& x, Vector& p) {
  const double tol = 1e-12 * (1.0 + net.pbar.maxCoeff());
  constexpr int kCap = 1'000'000;
  for (int it = 1; it <= kCap; ++it) {
    const Vector next = (net.pi.transpose() * p + x).cwiseMin(net.pbar);
    const double change = (next - p).cwiseAbs().maxCoeff();
    p = next;
    if (change <= tol) return it;
  }
  throw SolverError("clearing iteration did not settle within " + std::to_string(kCap) +
                    " rounds");
}

ClearingResult finish(const FinancialNetwork& net, Vector p, int iterations) {
  ClearingResult out;
  out.defaults.resize(static_cast<std::size_t>(net.size()));
  for (int i = 0; i < net.size(); ++i) out.defaults[i] = p(i) < net.pbar(i) - kDefaultTol;
  out.total_payment = p.sum();
  out.p = std::move(p);
  out.iterations = iterations;
  return out;
}

optim::LinearProgram clearing_program(const FinancialNetwork& net, const Vector& x,
                                      const Vector& weights) {
  const int d = net.size();
  optim::LinearProgram lp;
  lp.sense = optim::Sense::kMaximize;
  lp.objective = weights;
  lp.a = RowMatrix(Matrix::Identity(d, d) - net.pi.transpose());
  lp.b = x;
  lp.lower = Vector::Zero(d);
  lp.upper = net.pbar;
  return lp;
}

}  // namespace

ClearingResult clearing_fixed_point(const FinancialNetwork& net, const Vector& x) {
  check_cash_flow(net, x);
  const int d = net.size();
  Vector p = net.pbar;
  std::vector<char> defaulted(static_cast<std::size_t>(d), 0);
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(d));
  const int cap = 50 * d;
  int rounds = 0;
  while (rounds < cap) {
    ++rounds;
    const Vector inflow = net.pi.transpose() * p + x;
    bool grew = false;
    for (int i = 0; i < d; ++i) {
      if (!defaulted[i] && inflow(i) < net.pbar(i) * (1.0 - 1e-15)) {
        defaulted[i] = 1;
        grew = true;
      }
    }
    if (!grew) break;

    members.clear();
    for (int i = 0; i < d; ++i) {
      if (defaulted[i]) members.push_back(i);
    }
    const int k = static_cast<int>(members.size());
    Matrix system(k, k);
    Vector rhs(k);
    for (int a = 0; a < k; ++a) {
      const int i = members[a];
      double r = x(i);
      for (int j = 0; j < d; ++j) {
        if (!defaulted[j]) r += net.pi(j, i) * net.pbar(j);
      }
      rhs(a) = r;
      for (int b = 0; b < k; ++b) system(a, b) = (a == b ? 1.0 : 0.0) - net.pi(members[b], i);
    }
    Eigen::PartialPivLU<Matrix> lu(system);
    if (!(lu.rcond() > 1e-12)) {
      // A closed default cycle; settle it by monotone iteration instead.
      rounds += picard(net, x, p);
      return finish(net, std::move(p), rounds);
    }
    const Vector sol = lu.solve(rhs);
    for (int a = 0; a < k; ++a) {
      const int i = members[a];
      p(i) = std::clamp(sol(a), 0.0, net.pbar(i));
    }
  }
  return finish(net, std::move(p), rounds);
}

ClearingResult clearing_lp(const FinancialNetwork& net, const Vector& x, const Vector& weights) {
  check_cash_flow(net, x);
  if (weights.size() != net.size()) throw ValidationError("weight vector size mismatch");
  if ((weights.array() <= 0.0).any()) throw ValidationError("clearing LP weights must be positive");
  const optim::LpResult res = optim::solve_lp(clearing_program(net, x, weights));
  if (res.status != optim::LpStatus::kOptimal) {
    throw SolverError("clearing LP ended " + optim::to_string(res.status) + " after " +
                      std::to_string(res.iterations) + " iterations");
  }
  return finish(net, res.x.cwiseMax(0.0).cwiseMin(net.pbar), static_cast<int>(res.iterations));
}

double aggregate_en(const FinancialNetwork& net, const Vector& x) {
  if ((x.array() < 0.0).any()) return -std::numeric_limits<double>::infinity();
  return clearing_fixed_point(net, x).total_payment;
}

Vector en_supergradient(const FinancialNetwork& net, const Vector& x) {
  check_cash_flow(net, x);
  const optim::LpResult res =
      optim::solve_lp(clearing_program(net, x, Vector::Ones(net.size())));
  if (res.status != optim::LpStatus::kOptimal) {
    throw SolverError("clearing dual unavailable: LP ended " + optim::to_string(res.status) +
                      " after " + std::to_string(res.iterations) + " iterations");
  }
  return res.row_duals.cwiseMax(0.0);
}

bool is_clearing_vector(const FinancialNetwork& net, const Vector& x, const Vector& p,
                        double tol) {
  const Vector inflow = net.pi.transpose() * p + x;
  for (int i = 0; i < net.size(); ++i) {
    if (p(i) < -tol || p(i) > net.pbar(i) + tol) return false;
    if (p(i) > inflow(i) + tol) return false;
    const bool full = std::abs(p(i) - net.pbar(i)) <= tol;
    const bool exhausts = std::abs(p(i) - inflow(i)) <= tol;
    if (!full && !exhausts) return false;
  }
  return true;
}

bool ClearingPolytope::contains(const Vector& p, double tol) const {
  return ((a_ub * p - b_ub).array() <= tol).all();
}

ClearingPolytope clearing_polytope(const FinancialNetwork& net, const Vector& x,
                                   const std::vector<int>& y) {
  const int d = net.size();
  const Matrix lia = Matrix::Identity(d, d) - net.pi.transpose();
  const double q = (net.pi.transpose() * net.pbar + x).maxCoeff();

  ClearingPolytope poly;
  poly.y = y;
  poly.a_ub = Matrix::Zero(5 * d, d);
  poly.b_ub = Vector::Zero(5 * d);
  poly.a_eq = Matrix::Zero(d, d);
  poly.b_eq = Vector::Zero(d);
  for (int i = 0; i < d; ++i) {
    const double yi = y[i];
    poly.a_ub.row(i) = lia.row(i);                  // p <= x + pi^T p
    poly.b_ub(i) = x(i);
    poly.a_ub(d + i, i) = -1.0;                     // p >= pbar y
    poly.b_ub(d + i) = -net.pbar(i) * yi;
    poly.a_ub.row(2 * d + i) = -lia.row(i);         // p >= x + pi^T p - Q y
    poly.b_ub(2 * d + i) = -x(i) + q * yi;
    poly.a_ub(3 * d + i, i) = -1.0;                 // p >= 0
    poly.a_ub(4 * d + i, i) = 1.0;                  // p <= pbar
    poly.b_ub(4 * d + i) = net.pbar(i);
    if (y[i] == 1) {
      poly.a_eq(i, i) = 1.0;
      poly.b_eq(i) = net.pbar(i);
    } else {
      poly.a_eq.row(i) = lia.row(i);
      poly.b_eq(i) = x(i);
    }
  }
  return poly;
}

std::vector<ClearingPolytope> enumerate_clearing_vectors(const FinancialNetwork& net,
                                                         const Vector& x) {
  check_cash_flow(net, x);
  const int d = net.size();
  if (d > kMaxEnumerationDim) {
    throw CapacityError("enumeration supports d <= " + std::to_string(kMaxEnumerationDim) +
                        ", got " + std::to_string(d));
  }
  std::vector<ClearingPolytope> out;
  std::vector<int> y(static_cast<std::size_t>(d));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    for (int i = 0; i < d; ++i) y[i] = (mask >> i) & 1u;
    ClearingPolytope poly = clearing_polytope(net, x, y);
    // Feasibility check; the box rows go in as variable bounds.
    optim::LinearProgram lp = optim::LinearProgram::with_bounds(
        optim::Sense::kMinimize, Vector::Zero(d), Vector::Zero(d), net.pbar);
    lp.a = RowMatrix(poly.a_ub.topRows(3 * d));
    lp.b = poly.b_ub.head(3 * d);
    if (optim::solve_lp(lp).status == optim::LpStatus::kOptimal) out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace sysvar::clearing
