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

#include "sysvar/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sysvar/errors.hpp"

namespace sysvar::optim {
namespace {

struct Candidate {
  bool ok = false;
  Vector z;
  double dist2 = std::numeric_limits<double>::infinity();
  double min_multiplier = 0.0;
};

class Projector {
 public:
  Projector(const Vector& v, RowMatrix rows, Vector rhs, double tol)
      : v_(v), rows_(std::move(rows)), rhs_(std::move(rhs)), tol_(tol) {}

  double violation(const Vector& z, int i) const { return rows_.row(i).dot(z) - rhs_(i); }

  // Projection onto the face where the rows in `active` hold with equality.
  Candidate face(const std::vector<int>& active) const {
    Candidate c;
    const int k = static_cast<int>(active.size());
    if (k == 0) {
      c.z = v_;
    } else {
      Matrix as(k, v_.size());
      Vector bs(k);
      for (int r = 0; r < k; ++r) {
        as.row(r) = rows_.row(active[r]);
        bs(r) = rhs_(active[r]);
      }
      const Matrix gram = as * as.transpose();
      Eigen::FullPivLU<Matrix> lu(gram);
      lu.setThreshold(1e-10);
      if (lu.rank() < k) return c;
      const Vector mu = lu.solve(as * v_ - bs);
      c.min_multiplier = mu.minCoeff();
      c.z = v_ - as.transpose() * mu;
    }
    c.dist2 = (c.z - v_).squaredNorm();
    c.ok = true;
    return c;
  }

  bool feasible_on(const Vector& z, const std::vector<int>& set) const {
    for (int i : set) {
      if (violation(z, i) > tol_) return false;
    }
    return true;
  }

  // Exact projection onto the rows in `work` by face enumeration.
  Candidate solve(const std::vector<int>& work, int dim) const {
    Candidate best;
    const int m = static_cast<int>(work.size());
    const int kmax = std::min(dim, m);
    std::vector<int> pick;
    std::vector<int> active;
    for (int k = 0; k <= kmax; ++k) {
      // Iterate k-subsets of work in lexicographic order.
      pick.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[i] = i;
      for (;;) {
        active.clear();
        for (int i : pick) active.push_back(work[i]);
        Candidate c = face(active);
        if (c.ok && feasible_on(c.z, work)) {
          if (c.min_multiplier >= -tol_) return c;
          if (c.dist2 < best.dist2) best = c;
        }
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
    return best;
  }

  int rows() const { return static_cast<int>(rhs_.size()); }
  double tol() const { return tol_; }

 private:
  Vector v_;
  RowMatrix rows_;
  Vector rhs_;
  double tol_;
};

}  // namespace

QpResult min_norm_qp(const Vector& v, const RowMatrix& a, const Vector& b, const Vector& lo,
                     const Vector& hi) {
  const int g = static_cast<int>(v.size());
  if (g > kMaxQpDim) {
    throw CapacityError("min-norm QP supports dimension <= " + std::to_string(kMaxQpDim) +
                        ", got " + std::to_string(g));
  }
  if (a.cols() != g || a.rows() != b.size() || lo.size() != g || hi.size() != g) {
    throw ValidationError("min-norm QP dimensions are inconsistent");
  }

  double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  std::vector<std::pair<Vector, double>> kept;
  for (int i = 0; i < a.rows(); ++i) {
    const double nrm = a.row(i).norm();
    if (nrm == 0.0) {
      if (b(i) < -1e-12) throw InfeasibleError("constraint 0 <= " + std::to_string(b(i)));
      continue;
    }
    kept.emplace_back(a.row(i).transpose() / nrm, b(i) / nrm);
  }
  for (int j = 0; j < g; ++j) {
    if (lo(j) > hi(j)) throw InfeasibleError("box has lo > hi");
    if (std::isfinite(hi(j))) kept.emplace_back(Vector::Unit(g, j), hi(j));
    if (std::isfinite(lo(j))) kept.emplace_back(-Vector::Unit(g, j), -lo(j));
  }
  const int m = static_cast<int>(kept.size());
  RowMatrix rows(m, g);
  Vector rhs(m);
  for (int i = 0; i < m; ++i) {
    rows.row(i) = kept[i].first.transpose();
    rhs(i) = kept[i].second;
    scale = std::max(scale, std::abs(rhs(i)));
  }
  const Projector proj(v, std::move(rows), std::move(rhs), 1e-10 * scale);

  std::vector<int> work;
  QpResult out;
  Candidate cur = proj.face({});
  for (;;) {
    ++out.rounds;
    int worst = -1;
    double worst_viol = proj.tol();
    for (int i = 0; i < m; ++i) {
      const double viol = proj.violation(cur.z, i);
      if (viol > worst_viol) {
        worst_viol = viol;
        worst = i;
      }
    }
    if (worst < 0) break;
    if (std::find(work.begin(), work.end(), worst) != work.end()) {
      throw SolverError("min-norm QP stalled on a repeated constraint");
    }
    work.push_back(worst);
    cur = proj.solve(work, g);
    if (!cur.ok) throw InfeasibleError("min-norm QP region is empty");
  }

  out.z = cur.z;
  out.distance = std::sqrt(cur.dist2);
  double primal = 0.0;
  for (int i = 0; i < m; ++i) primal = std::max(primal, proj.violation(cur.z, i));
  out.kkt_residual = std::max(primal, -std::min(cur.min_multiplier, 0.0));
  return out;
}

}  // namespace sysvar::optim
