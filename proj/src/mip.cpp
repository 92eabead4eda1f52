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

#include "sysvar/mip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "sysvar/clearing.hpp"
#include "sysvar/errors.hpp"
#include "sysvar/kernels.hpp"
#include "sysvar/log.hpp"
#include "sysvar/lp.hpp"
#include "sysvar/qp.hpp"

namespace sysvar::optim {
namespace {

constexpr double kInfD = std::numeric_limits<double>::infinity();
constexpr double kFracTol = 1e-7;

// -1 free, 0 allowed to fail, 1 required to meet the threshold.
using States = std::vector<signed char>;

struct Node {
  double bound;
  long id;
  States state;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

using NodeQueue = std::priority_queue<Node, std::vector<Node>, NodeOrder>;

double scenario_total(const ScenarioMip& m, int n, const Vector& z) {
  // Inside the box the shifted cash flow is nonnegative up to rounding.
  const Vector x =
      (m.scenarios.values.row(n).transpose() + m.grouping.inject(z)).cwiseMax(0.0);
  return clearing::clearing_fixed_point(m.net, x).total_payment;
}

bool is_member(const ScenarioMip& m, const Vector& z) {
  const kernels::ViolationCount c =
      kernels::serial::count_violations(m.net, m.grouping, m.scenarios, z, m.spec.alpha);
  return c.nonnegative && c.violations <= m.spec.max_violations(m.scenarios.count());
}

// Moves z up by a vanishing amount until it passes the strict membership test.
bool settle(const ScenarioMip& m, Vector& z, const Vector& hi) {
  if (is_member(m, z)) return true;
  double step = 1e-12 * (1.0 + z.cwiseAbs().maxCoeff());
  for (int k = 0; k < 60; ++k, step *= 2.0) {
    const Vector trial = (z.array() + step).matrix().cwiseMin(hi);
    if (is_member(m, trial)) {
      z = trial;
      return true;
    }
  }
  return false;
}

std::vector<int> success_pattern(const ScenarioMip& m, const Vector& z) {
  const Vector agg = kernels::serial::aggregates(m.net, m.grouping, m.scenarios, z);
  std::vector<int> y(static_cast<std::size_t>(agg.size()));
  for (int n = 0; n < agg.size(); ++n) {
    y[n] = agg(n) >= m.spec.alpha - kernels::kViolationSlack ? 1 : 0;
  }
  return y;
}

class Search {
 public:
  Search(const ScenarioMip& m, const MipOptions& o) : m_(m), opt_(o) {
    d_ = m.net.size();
    g_ = m.grouping.g;
    n_ = m.scenarios.count();
    max_viol_ = m.spec.max_violations(n_);
    required_ = n_ - max_viol_;
  }

  void offer(Vector z, double value) {
    if (value < best_) {
      best_ = value;
      best_z_ = std::move(z);
      out_.incumbent_trace.push_back(value);
      log::emit(log::Level::kDebug, "bnb_incumbent",
                {{"nodes", out_.nodes}, {"objective", value}});
    }
  }

  MipSolution finish(double open_bound, bool exhausted) {
    out_.feasible = std::isfinite(best_);
    if (!out_.feasible) {
      out_.optimal = !exhausted;
      return out_;
    }
    out_.z = best_z_;
    out_.objective = best_;
    out_.bound = std::min(best_, open_bound);
    out_.gap = best_ - out_.bound;
    out_.optimal = !exhausted;
    out_.y = success_pattern(m_, out_.z);
    log::emit(log::Level::kInfo, "bnb_done",
              {{"nodes", out_.nodes}, {"objective", out_.objective}, {"gap", out_.gap},
               {"optimal", out_.optimal}});
    return out_;
  }

 protected:
  const ScenarioMip& m_;
  MipOptions opt_;
  int d_ = 0, g_ = 0, n_ = 0, max_viol_ = 0, required_ = 0;
  double best_ = kInfD;
  Vector best_z_;
  MipSolution out_;
};

class LinearSearch : public Search {
 public:
  using Search::Search;

  MipSolution run() {
    const Vector& w = m_.objective.weights;
    if (is_member(m_, m_.box.hi)) offer(m_.box.hi, w.dot(m_.box.hi));
    else return finish(kInfD, false);

    NodeQueue queue;
    long next_id = 0;
    queue.push({-kInfD, next_id++, States(static_cast<std::size_t>(n_), -1)});
    while (!queue.empty()) {
      if (queue.top().bound >= best_ - opt_.gap_tol) return finish(queue.top().bound, false);
      if (out_.nodes >= opt_.node_budget) return finish(queue.top().bound, true);
      Node node = queue.top();
      queue.pop();
      ++out_.nodes;

      Relaxation rel = solve(node.state);
      if (!rel.ok || rel.value >= best_ - opt_.gap_tol) continue;

      int branch = -1;
      double most = kFracTol;
      for (int a = 0; a < static_cast<int>(rel.active.size()); ++a) {
        const int n = rel.active[a];
        if (node.state[n] != -1) continue;
        const double frac = std::min(rel.y(a), 1.0 - rel.y(a));
        if (frac > most) {
          most = frac;
          branch = n;
        }
      }
      if (branch < 0) {
        accept(rel.z);
        continue;
      }
      if (out_.nodes == 1 || out_.nodes % 16 == 0) round(node.state, rel);

      States up = node.state;
      up[branch] = 1;
      queue.push({rel.value, next_id++, std::move(up)});
      const int zeros = static_cast<int>(std::count(node.state.begin(), node.state.end(), 0));
      if (zeros < max_viol_) {
        States down = node.state;
        down[branch] = 0;
        queue.push({rel.value, next_id++, std::move(down)});
      }
    }
    return finish(kInfD, false);
  }

 private:
  struct Relaxation {
    bool ok = false;
    double value = 0.0;
    Vector z;
    std::vector<int> active;
    Vector y;
    Vector totals;
  };

  void accept(Vector z) {
    if (!settle(m_, z, m_.box.hi)) {
      log::emit(log::Level::kWarn, "bnb_settle_failed", {{"nodes", out_.nodes}});
      return;
    }
    offer(z, m_.objective.weights.dot(z));
  }

  Relaxation solve(const States& state) const {
    Relaxation rel;
    for (int n = 0; n < n_; ++n) {
      if (state[n] != 0) rel.active.push_back(n);
    }
    const int na = static_cast<int>(rel.active.size());
    const int block = d_ + 1;
    const int nv = g_ + na * block;
    const bool card = required_ > 0;
    const int rows = na * block + (card ? 1 : 0);

    LinearProgram lp;
    lp.sense = Sense::kMinimize;
    lp.objective = Vector::Zero(nv);
    lp.objective.head(g_) = m_.objective.weights;
    lp.a = RowMatrix::Zero(rows, nv);
    lp.b = Vector::Zero(rows);
    lp.lower = Vector::Zero(nv);
    lp.upper = Vector::Zero(nv);
    lp.lower.head(g_) = m_.box.lo;
    lp.upper.head(g_) = m_.box.hi;
    for (int a = 0; a < na; ++a) {
      const int n = rel.active[a];
      const int base = g_ + a * block;
      for (int i = 0; i < d_; ++i) {
        const int r = a * block + i;
        for (int j = 0; j < d_; ++j) lp.a(r, base + j) = -m_.net.pi(j, i);
        lp.a(r, base + i) += 1.0;
        lp.a(r, m_.grouping.assignment[i]) = -1.0;
        lp.b(r) = m_.scenarios.values(n, i);
        lp.upper(base + i) = m_.net.pbar(i);
      }
      const int r = a * block + d_;
      lp.a.row(r).segment(base, d_).setConstant(-1.0);
      lp.a(r, base + d_) = m_.spec.alpha;
      lp.lower(base + d_) = state[n] == 1 ? 1.0 : 0.0;
      lp.upper(base + d_) = 1.0;
      if (card) lp.a(rows - 1, base + d_) = -1.0;
    }
    if (card) lp.b(rows - 1) = -static_cast<double>(required_);

    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::kUnbounded) throw SolverError("bounded MILP relaxation unbounded");
    if (res.status != LpStatus::kOptimal) return rel;
    rel.ok = true;
    rel.value = res.objective;
    rel.z = res.x.head(g_).cwiseMax(m_.box.lo).cwiseMin(m_.box.hi);
    rel.y.resize(na);
    rel.totals.resize(na);
    for (int a = 0; a < na; ++a) {
      const int base = g_ + a * block;
      rel.y(a) = res.x(base + d_);
      rel.totals(a) = res.x.segment(base, d_).sum();
    }
    return rel;
  }

  // Keeps the scenarios with the largest relaxed totals and solves the fixed LP.
  void round(const States& state, const Relaxation& rel) {
    std::vector<int> order(rel.active.size());
    for (std::size_t a = 0; a < order.size(); ++a) order[a] = static_cast<int>(a);
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
      const bool lf = state[rel.active[l]] == 1;
      const bool rf = state[rel.active[r]] == 1;
      if (lf != rf) return lf;
      return rel.totals(l) > rel.totals(r);
    });
    States fixed(static_cast<std::size_t>(n_), 0);
    int kept = 0;
    for (int a : order) {
      const int n = rel.active[a];
      if (kept < required_ || state[n] == 1) {
        fixed[n] = 1;
        ++kept;
      }
    }
    if (kept < required_) return;
    const Relaxation r = solve(fixed);
    if (r.ok && r.value < best_) accept(r.z);
  }
};

// Branches on which scenarios must meet the threshold. A node is bounded by
// minimizing the objective over the box and the supergradient cuts of its
// required scenarios; the cut pool is shared by all nodes.
class CutSearch : public Search {
 public:
  CutSearch(const ScenarioMip& m, const MipOptions& o)
      : Search(m, o), cuts_(static_cast<std::size_t>(m.scenarios.count())) {
    quadratic_ = m.objective.kind == ObjectiveKind::kQuadratic;
    lo_ = m.box.lo;
    hi_ = m.box.hi;
    if (quadratic_) {
      v_ = m.objective.center;
      hi_ = hi_.cwiseMax(v_);
    }
    node_tol_ = 1e-7 * (1.0 + std::abs(m.spec.alpha));
  }

  MipSolution run() {
    if (quadratic_) {
      const Vector inside = v_.cwiseMax(lo_);
      if (is_member(m_, inside)) {
        offer(inside, value(inside));
        return finish(best_, false);
      }
    }
    if (is_member(m_, hi_)) offer(hi_, value(hi_));
    else return finish(kInfD, false);

    NodeQueue queue;
    long next_id = 0;
    queue.push({-kInfD, next_id++, States(static_cast<std::size_t>(n_), -1)});
    while (!queue.empty()) {
      if (queue.top().bound >= best_ - opt_.gap_tol) return finish(queue.top().bound, false);
      if (out_.nodes >= opt_.node_budget) return finish(queue.top().bound, true);
      Node node = queue.top();
      queue.pop();
      ++out_.nodes;

      const int zeros = static_cast<int>(std::count(node.state.begin(), node.state.end(), 0));
      if (zeros == max_viol_) {
        for (auto& s : node.state) {
          if (s == -1) s = 1;
        }
      }
      Vector z;
      if (!relax(node.state, z)) continue;
      const double bound = value(z);
      if (bound >= best_ - opt_.gap_tol) continue;

      int branch = -1;
      int violated = 0;
      double deficit = 0.0;
      for (int n = 0; n < n_; ++n) {
        if (node.state[n] != -1) continue;
        const double gap = m_.spec.alpha - scenario_total(m_, n, z);
        if (gap > node_tol_) {
          ++violated;
          if (gap > deficit) {
            deficit = gap;
            branch = n;
          }
        }
      }
      if (zeros + violated <= max_viol_) {
        if (settle(m_, z, hi_)) offer(z, value(z));
        else log::emit(log::Level::kWarn, "bnb_settle_failed", {{"nodes", out_.nodes}});
        continue;
      }
      States up = node.state;
      up[branch] = 1;
      queue.push({bound, next_id++, std::move(up)});
      if (zeros < max_viol_) {
        States down = node.state;
        down[branch] = 0;
        queue.push({bound, next_id++, std::move(down)});
      }
    }
    return finish(kInfD, false);
  }

 private:
  struct Cut {
    Vector a;
    double b;
  };

  double value(const Vector& z) const {
    return quadratic_ ? (z - v_).norm() : m_.objective.weights.dot(z);
  }

  // Minimizes the objective over the box and the cut model of the required
  // scenarios, adding cuts until every required scenario meets the threshold.
  bool relax(const States& state, Vector& z) {
    std::vector<int> required;
    for (int n = 0; n < n_; ++n) {
      if (state[n] == 1) required.push_back(n);
    }
    constexpr int kRounds = 10'000;
    for (int round = 0; round < kRounds; ++round) {
      int rows = 0;
      for (int n : required) rows += static_cast<int>(cuts_[n].size());
      RowMatrix a(rows, g_);
      Vector b(rows);
      int r = 0;
      for (int n : required) {
        for (const Cut& c : cuts_[n]) {
          a.row(r) = c.a.transpose();
          b(r++) = c.b;
        }
      }
      if (!solve_model(a, b, z)) return false;
      bool added = false;
      for (int n : required) {
        // Inside the box the shifted cash flow is nonnegative up to rounding.
        const Vector x =
            (m_.scenarios.values.row(n).transpose() + m_.grouping.inject(z)).cwiseMax(0.0);
        const double total = clearing::clearing_fixed_point(m_.net, x).total_payment;
        if (total >= m_.spec.alpha - node_tol_) continue;
        const Vector slope = m_.grouping.collect(clearing::en_supergradient(m_.net, x));
        // total + slope^T (z' - z) >= alpha
        cuts_[n].push_back({-slope, total - m_.spec.alpha - slope.dot(z)});
        added = true;
      }
      if (!added) return true;
    }
    throw SolverError("cut loop did not converge within " + std::to_string(kRounds) + " rounds");
  }

  bool solve_model(const RowMatrix& a, const Vector& b, Vector& z) const {
    if (quadratic_) {
      try {
        z = min_norm_qp(v_, a, b, lo_, hi_).z;
        return true;
      } catch (const InfeasibleError&) {
        return false;
      }
    }
    LinearProgram lp =
        LinearProgram::with_bounds(Sense::kMinimize, m_.objective.weights, lo_, hi_);
    lp.a = a;
    lp.b = b;
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::kOptimal) return false;
    z = res.x.cwiseMax(lo_).cwiseMin(hi_);
    return true;
  }

  bool quadratic_ = false;
  Vector v_, lo_, hi_;
  double node_tol_ = 0.0;
  std::vector<std::vector<Cut>> cuts_;
};

}  // namespace

void validate(const ScenarioMip& m) {
  m.net.validate();
  m.grouping.validate();
  m.spec.validate();
  const int g = m.grouping.g;
  if (m.grouping.size() != m.net.size()) throw ValidationError("grouping size mismatch");
  if (m.scenarios.dimension() != m.net.size()) throw ValidationError("scenario dimension mismatch");
  if (m.scenarios.count() < 1) throw ValidationError("at least one scenario is required");
  if (m.box.lo.size() != g || m.box.hi.size() != g) throw ValidationError("box size mismatch");
  if ((m.box.lo.array() > m.box.hi.array()).any()) throw ValidationError("box has lo > hi");
  if (m.objective.kind == ObjectiveKind::kLinear) {
    if (m.objective.weights.size() != g) throw ValidationError("weight vector size mismatch");
    if ((m.objective.weights.array() < 0.0).any() || m.objective.weights.isZero(0.0)) {
      throw ValidationError("weights must be nonnegative and not all zero");
    }
  } else if (m.objective.center.size() != g) {
    throw ValidationError("center vector size mismatch");
  }
}

MipSolution branch_and_bound(const ScenarioMip& model, const MipOptions& options) {
  validate(model);
  if (model.objective.kind == ObjectiveKind::kLinear) {
    if (options.lp_relaxation) return LinearSearch(model, options).run();
    return CutSearch(model, options).run();
  }
  if (model.grouping.g > kMaxQpDim) {
    throw CapacityError("quadratic scalarization supports g <= " + std::to_string(kMaxQpDim));
  }
  return CutSearch(model, options).run();
}

}  // namespace sysvar::optim
