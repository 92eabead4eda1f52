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

#include "sysvar/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sysvar/errors.hpp"

namespace sysvar::optim {

LinearProgram LinearProgram::with_bounds(Sense sense, Vector objective, Vector lower,
                                         Vector upper) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = std::move(objective);
  lp.lower = std::move(lower);
  lp.upper = std::move(upper);
  lp.a.resize(0, lp.objective.size());
  lp.b.resize(0);
  return lp;
}

void LinearProgram::add_row(const Vector& coefficients, double rhs) {
  const Eigen::Index m = a.rows();
  a.conservativeResize(m + 1, objective.size());
  a.row(m) = coefficients.transpose();
  b.conservativeResize(m + 1);
  b(m) = rhs;
}

void LinearProgram::validate() const {
  const int n = num_vars();
  if (lower.size() != n || upper.size() != n) throw ValidationError("LP bound size mismatch");
  if (a.cols() != n && a.rows() > 0) throw ValidationError("LP matrix column mismatch");
  if (a.rows() != b.size()) throw ValidationError("LP row count mismatch");
  for (int j = 0; j < n; ++j) {
    if (lower(j) > upper(j)) throw ValidationError("LP variable with lower > upper");
    if (lower(j) == kInf || upper(j) == -kInf) throw ValidationError("LP bound is inverted infinity");
  }
  if (!a.allFinite() || !b.allFinite() || !objective.allFinite()) {
    throw ValidationError("LP data must be finite");
  }
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

enum class VarState : unsigned char { kBasic, kAtLower, kAtUpper, kFreeZero };

class BoundedSimplex {
 public:
  BoundedSimplex(const LinearProgram& lp, const SimplexOptions& options)
      : lp_(lp), opt_(options), m_(lp.num_rows()), n_(lp.num_vars()) {}

  LpResult run();

 private:
  enum class PhaseOutcome { kOptimal, kUnbounded };

  void setup();
  PhaseOutcome iterate(bool phase_one);
  void pivot(int row, int col);
  void refactor();
  void recompute_primal();
  void compute_reduced_costs(const Vector& cost);
  void drive_out_artificials();
  bool is_fixed(int j) const { return lb_(j) == ub_(j); }
  double scale() const { return 1.0 + rhs_scale_; }

  const LinearProgram& lp_;
  SimplexOptions opt_;
  int m_;
  int n_;
  int ncols_ = 0;
  int first_art_ = 0;
  double rhs_scale_ = 0.0;

  RowMatrix full_;
  RowMatrix tab_;
  Vector lb_, ub_, cost_, x_, d_;
  std::vector<VarState> state_;
  std::vector<int> basis_;
  long iterations_ = 0;
  long pivots_since_refactor_ = 0;
};

void BoundedSimplex::setup() {
  // Columns: structurals, one slack per row, then artificials for rows whose
  // slack would start negative.
  Vector xn(n_);
  lb_.resize(n_);
  ub_.resize(n_);
  state_.assign(static_cast<std::size_t>(n_), VarState::kAtLower);
  for (int j = 0; j < n_; ++j) {
    lb_(j) = lp_.lower(j);
    ub_(j) = lp_.upper(j);
    if (std::isfinite(lb_(j))) {
      xn(j) = lb_(j);
      state_[j] = VarState::kAtLower;
    } else if (std::isfinite(ub_(j))) {
      xn(j) = ub_(j);
      state_[j] = VarState::kAtUpper;
    } else {
      xn(j) = 0.0;
      state_[j] = VarState::kFreeZero;
    }
  }
  rhs_scale_ = m_ > 0 ? lp_.b.cwiseAbs().maxCoeff() : 0.0;
  const Vector residual = m_ > 0 ? Vector(lp_.b - lp_.a * xn) : Vector(0);
  std::vector<int> art_rows;
  for (int i = 0; i < m_; ++i) {
    if (residual(i) < -opt_.feasibility_tol * scale()) art_rows.push_back(i);
  }
  first_art_ = n_ + m_;
  ncols_ = n_ + m_ + static_cast<int>(art_rows.size());

  full_ = RowMatrix::Zero(m_, ncols_);
  if (m_ > 0) full_.leftCols(n_) = lp_.a;
  for (int i = 0; i < m_; ++i) full_(i, n_ + i) = 1.0;
  for (std::size_t k = 0; k < art_rows.size(); ++k) full_(art_rows[k], first_art_ + static_cast<int>(k)) = -1.0;

  lb_.conservativeResize(ncols_);
  ub_.conservativeResize(ncols_);
  x_ = Vector::Zero(ncols_);
  x_.head(n_) = xn;
  for (int j = n_; j < ncols_; ++j) {
    lb_(j) = 0.0;
    ub_(j) = kInf;
  }
  state_.resize(static_cast<std::size_t>(ncols_), VarState::kAtLower);

  basis_.assign(static_cast<std::size_t>(m_), -1);
  tab_ = full_;
  for (int i = 0; i < m_; ++i) {
    basis_[i] = n_ + i;
    x_(n_ + i) = residual(i);
  }
  for (std::size_t k = 0; k < art_rows.size(); ++k) {
    const int i = art_rows[k];
    const int col = first_art_ + static_cast<int>(k);
    basis_[i] = col;
    x_(col) = -residual(i);
    x_(n_ + i) = 0.0;
    state_[n_ + i] = VarState::kAtLower;
    tab_.row(i) *= -1.0;
  }
  for (int i = 0; i < m_; ++i) state_[basis_[i]] = VarState::kBasic;
}

void BoundedSimplex::compute_reduced_costs(const Vector& cost) {
  d_ = cost;
  for (int r = 0; r < m_; ++r) {
    const double cb = cost(basis_[r]);
    if (cb != 0.0) d_ -= cb * tab_.row(r).transpose();
  }
  for (int r = 0; r < m_; ++r) d_(basis_[r]) = 0.0;
}

void BoundedSimplex::pivot(int row, int col) {
  const double piv = tab_(row, col);
  tab_.row(row) /= piv;
  for (int i = 0; i < m_; ++i) {
    if (i == row) continue;
    const double f = tab_(i, col);
    if (f != 0.0) {
      tab_.row(i) -= f * tab_.row(row);
      tab_(i, col) = 0.0;
    }
  }
  const double dj = d_(col);
  if (dj != 0.0) {
    d_ -= dj * tab_.row(row).transpose();
    d_(col) = 0.0;
  }
  state_[basis_[row]] = VarState::kAtLower;  // caller fixes the exact state
  basis_[row] = col;
  state_[col] = VarState::kBasic;
  ++pivots_since_refactor_;
}

void BoundedSimplex::refactor() {
  if (m_ == 0) return;
  Matrix basis_matrix(m_, m_);
  for (int r = 0; r < m_; ++r) basis_matrix.col(r) = full_.col(basis_[r]);
  Eigen::PartialPivLU<Matrix> lu(basis_matrix);
  tab_ = lu.solve(Matrix(full_));
  // Basic columns are unit vectors by construction.
  for (int r = 0; r < m_; ++r) {
    tab_.col(basis_[r]).setZero();
    tab_(r, basis_[r]) = 1.0;
  }
  pivots_since_refactor_ = 0;
}

void BoundedSimplex::recompute_primal() {
  if (m_ == 0) return;
  Vector rhs = lp_.b;
  for (int j = 0; j < ncols_; ++j) {
    if (state_[j] != VarState::kBasic && x_(j) != 0.0) rhs -= x_(j) * full_.col(j);
  }
  // The slack block of the tableau holds B^{-1}.
  const Vector xb = tab_.block(0, n_, m_, m_) * rhs;
  for (int r = 0; r < m_; ++r) x_(basis_[r]) = xb(r);
}

BoundedSimplex::PhaseOutcome BoundedSimplex::iterate(bool phase_one) {
  bool bland = false;
  int degenerate = 0;
  const double ftol = opt_.feasibility_tol * scale();
  for (;;) {
    if (++iterations_ > opt_.iteration_limit) {
      throw SolverError("simplex iteration limit reached after " + std::to_string(iterations_ - 1) +
                        " iterations (" + std::to_string(m_) + " rows, " + std::to_string(n_) +
                        " columns)");
    }
    if (pivots_since_refactor_ >= std::max(opt_.refactor_interval, m_)) {
      refactor();
      recompute_primal();
      compute_reduced_costs(cost_);
    }

    // Pricing: Dantzig until degeneracy persists, then Bland.
    int enter = -1;
    int dir = 0;
    double best = 0.0;
    for (int j = 0; j < ncols_; ++j) {
      const VarState st = state_[j];
      if (st == VarState::kBasic || is_fixed(j)) continue;
      const double dj = d_(j);
      int cand = 0;
      if (st == VarState::kAtLower) {
        if (dj < -opt_.optimality_tol) cand = 1;
      } else if (st == VarState::kAtUpper) {
        if (dj > opt_.optimality_tol) cand = -1;
      } else {
        if (dj < -opt_.optimality_tol) cand = 1;
        else if (dj > opt_.optimality_tol) cand = -1;
      }
      if (cand == 0) continue;
      if (bland) {
        enter = j;
        dir = cand;
        break;
      }
      if (std::abs(dj) > best) {
        best = std::abs(dj);
        enter = j;
        dir = cand;
      }
    }
    if (enter < 0) return PhaseOutcome::kOptimal;

    // Ratio test, two passes: relaxed bound to find the step, then the most
    // stable (or lowest-index under Bland) pivot among rows within it.
    double relaxed = kInf;
    for (int r = 0; r < m_; ++r) {
      const double alpha = tab_(r, enter) * dir;
      const int b = basis_[r];
      if (alpha > opt_.pivot_tol && std::isfinite(lb_(b))) {
        relaxed = std::min(relaxed, (x_(b) - lb_(b) + ftol) / alpha);
      } else if (alpha < -opt_.pivot_tol && std::isfinite(ub_(b))) {
        relaxed = std::min(relaxed, (ub_(b) - x_(b) + ftol) / -alpha);
      }
    }
    int leave = -1;
    double step = kInf;
    double best_alpha = 0.0;
    for (int r = 0; r < m_; ++r) {
      const double alpha = tab_(r, enter) * dir;
      const int b = basis_[r];
      double ratio = kInf;
      if (alpha > opt_.pivot_tol && std::isfinite(lb_(b))) {
        ratio = (x_(b) - lb_(b)) / alpha;
      } else if (alpha < -opt_.pivot_tol && std::isfinite(ub_(b))) {
        ratio = (ub_(b) - x_(b)) / -alpha;
      } else {
        continue;
      }
      if (ratio > relaxed) continue;
      ratio = std::max(ratio, 0.0);
      bool take = false;
      if (leave < 0) {
        take = true;
      } else if (bland) {
        take = b < basis_[leave];
      } else {
        take = std::abs(alpha) > best_alpha;
      }
      if (take) {
        leave = r;
        step = ratio;
        best_alpha = std::abs(alpha);
      }
    }
    const double flip = (std::isfinite(lb_(enter)) && std::isfinite(ub_(enter)))
                            ? ub_(enter) - lb_(enter)
                            : kInf;
    if (leave < 0 && !std::isfinite(flip)) {
      if (phase_one) throw SolverError("phase one reported an unbounded ray");
      return PhaseOutcome::kUnbounded;
    }

    const bool do_flip = leave < 0 || flip <= step;
    const double t = do_flip ? flip : step;
    if (t != 0.0) {
      for (int r = 0; r < m_; ++r) {
        const double a = tab_(r, enter);
        if (a != 0.0) x_(basis_[r]) -= a * dir * t;
      }
    }
    if (do_flip) {
      if (dir > 0) {
        x_(enter) = ub_(enter);
        state_[enter] = VarState::kAtUpper;
      } else {
        x_(enter) = lb_(enter);
        state_[enter] = VarState::kAtLower;
      }
    } else {
      x_(enter) += dir * t;
      const int b = basis_[leave];
      const bool to_lower = tab_(leave, enter) * dir > 0.0;
      pivot(leave, enter);
      if (to_lower) {
        x_(b) = lb_(b);
        state_[b] = VarState::kAtLower;
      } else {
        x_(b) = ub_(b);
        state_[b] = VarState::kAtUpper;
      }
    }

    if (t <= 1e-12 * scale()) {
      if (++degenerate > opt_.degenerate_streak) bland = true;
    } else {
      degenerate = 0;
    }
  }
}

void BoundedSimplex::drive_out_artificials() {
  for (int r = 0; r < m_; ++r) {
    const int b = basis_[r];
    if (b < first_art_) continue;
    x_(b) = 0.0;
    int best = -1;
    double best_abs = 1e-7;
    for (int j = 0; j < first_art_; ++j) {
      if (state_[j] == VarState::kBasic) continue;
      if (std::abs(tab_(r, j)) > best_abs) {
        best_abs = std::abs(tab_(r, j));
        best = j;
      }
    }
    if (best < 0) continue;  // redundant row; the artificial stays basic at zero
    pivot(r, best);
    state_[b] = VarState::kAtLower;
  }
}

LpResult BoundedSimplex::run() {
  lp_.validate();
  setup();

  LpResult result;
  if (ncols_ > first_art_) {
    cost_ = Vector::Zero(ncols_);
    cost_.tail(ncols_ - first_art_).setOnes();
    compute_reduced_costs(cost_);
    iterate(true);
    refactor();
    recompute_primal();
    const double infeasibility = x_.tail(ncols_ - first_art_).cwiseMax(0.0).sum();
    if (infeasibility > 1e-8 * scale()) {
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations_;
      return result;
    }
    for (int j = first_art_; j < ncols_; ++j) {
      ub_(j) = 0.0;
      if (state_[j] != VarState::kBasic) {
        x_(j) = 0.0;
        state_[j] = VarState::kAtLower;
      }
    }
    drive_out_artificials();
    refactor();
    recompute_primal();
  }

  cost_ = Vector::Zero(ncols_);
  const double sign = lp_.sense == Sense::kMaximize ? -1.0 : 1.0;
  cost_.head(n_) = sign * lp_.objective;
  compute_reduced_costs(cost_);
  for (int round = 0;; ++round) {
    if (iterate(false) == PhaseOutcome::kUnbounded) {
      result.status = LpStatus::kUnbounded;
      result.iterations = iterations_;
      return result;
    }
    refactor();
    recompute_primal();
    compute_reduced_costs(cost_);
    // Stop unless refactoring exposed an improving column.
    bool improving = false;
    for (int j = 0; j < ncols_ && !improving; ++j) {
      if (state_[j] == VarState::kBasic || is_fixed(j)) continue;
      const double dj = d_(j);
      if ((state_[j] == VarState::kAtLower && dj < -opt_.optimality_tol) ||
          (state_[j] == VarState::kAtUpper && dj > opt_.optimality_tol) ||
          (state_[j] == VarState::kFreeZero && std::abs(dj) > opt_.optimality_tol)) {
        improving = true;
      }
    }
    if (!improving || round >= 5) break;
  }

  result.status = LpStatus::kOptimal;
  result.iterations = iterations_;
  result.x = x_.head(n_);
  // Snap structurals to bounds they sit on within rounding.
  for (int j = 0; j < n_; ++j) {
    if (state_[j] == VarState::kAtLower) result.x(j) = lb_(j);
    if (state_[j] == VarState::kAtUpper) result.x(j) = ub_(j);
  }
  result.objective = lp_.objective.dot(result.x);
  result.row_duals = m_ > 0 ? Vector(d_.segment(n_, m_)) : Vector(0);
  if (lp_.sense == Sense::kMaximize) {
    result.reduced_costs = -d_.head(n_);
  } else {
    result.reduced_costs = d_.head(n_);
  }
  double residual = 0.0;
  if (m_ > 0) residual = std::max(0.0, (lp_.a * result.x - lp_.b).maxCoeff());
  for (int j = 0; j < n_; ++j) {
    residual = std::max({residual, lp_.lower(j) - result.x(j), result.x(j) - lp_.upper(j)});
  }
  result.primal_residual = residual;
  return result;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  BoundedSimplex simplex(lp, options);
  return simplex.run();
}

}  // namespace sysvar::optim
