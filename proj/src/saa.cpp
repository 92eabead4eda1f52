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

#include "sysvar/saa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/kernels.hpp"
#include "sysvar/log.hpp"

namespace sysvar::saa {
namespace {

constexpr signed char kUnknown = -1;
constexpr double kBallMargin = 1e-6;

class Labeler {
 public:
  explicit Labeler(const Grid& grid)
      : grid_(grid), labels_(static_cast<std::size_t>(grid.size()), kUnknown) {}

  signed char at(long flat) const { return labels_[flat]; }
  bool known(long flat) const { return labels_[flat] != kUnknown; }

  void set(long flat, signed char value) {
    if (labels_[flat] == kUnknown) labels_[flat] = value;
    else if (labels_[flat] != value) ++conflicts_;
  }

  // Every grid point componentwise above the point at `index`.
  void mark_upper(const std::vector<int>& index) {
    grid_.for_each(std::vector<int>(index.size(), 0), index,
                   [&](long flat, const std::vector<int>&) { set(flat, 1); });
  }

  void mark_lower(const std::vector<int>& index) {
    std::vector<int> last(index.size());
    for (std::size_t j = 0; j < index.size(); ++j) last[j] = grid_.last(static_cast<int>(j));
    grid_.for_each(index, last, [&](long flat, const std::vector<int>&) { set(flat, 0); });
  }

  // Grid points >= z componentwise.
  void mark_above(const Vector& z) {
    std::vector<int> to(static_cast<std::size_t>(grid_.dim()));
    for (int j = 0; j < grid_.dim(); ++j) {
      to[j] = grid_.last_at_least(j, z(j));
      if (to[j] < 0) return;
    }
    mark_upper(to);
  }

  // Grid points strictly inside the ball of radius r around c.
  void mark_ball(const Vector& c, double r) {
    if (!(r > 0.0)) return;
    const int g = grid_.dim();
    std::vector<int> from(static_cast<std::size_t>(g)), to(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
      from[j] = grid_.first_at_most(j, c(j) + r);
      to[j] = grid_.last_at_least(j, c(j) - r);
      if (to[j] < 0 || from[j] > grid_.last(j)) return;
    }
    grid_.for_each(from, to, [&](long flat, const std::vector<int>& index) {
      if ((grid_.point(index) - c).norm() < r) set(flat, 0);
    });
  }

  std::vector<signed char> release() { return std::move(labels_); }
  long conflicts() const { return conflicts_; }

 private:
  const Grid& grid_;
  std::vector<signed char> labels_;
  long conflicts_ = 0;
};

using Evaluate = std::function<void(long, const std::vector<int>&)>;

void traverse_lines(const Grid& grid, Labeler& labels, const Evaluate& evaluate) {
  const int g = grid.dim();
  const int tail = g - 1;
  std::vector<int> from(static_cast<std::size_t>(g), 0), to(static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) to[j] = grid.last(j);
  to[tail] = 0;
  const int len = grid.last(tail) + 1;
  grid.for_each(from, to, [&](long base, const std::vector<int>& start) {
    std::vector<int> index = start;
    for (;;) {
      int a = -1, b = -1;
      for (int k = 0; k < len; ++k) {
        if (!labels.known(base + k)) {
          if (a < 0) a = k;
          b = k;
        }
      }
      if (a < 0) return;
      int pick = (a + b) / 2;
      for (int off = 0; labels.known(base + pick); ++off) {
        if (pick - off >= a && !labels.known(base + pick - off)) {
          pick -= off;
          break;
        }
        if (pick + off <= b && !labels.known(base + pick + off)) {
          pick += off;
          break;
        }
      }
      index[tail] = pick;
      evaluate(base + pick, index);
    }
  });
}

void traverse_order(const Grid& grid, Labeler& labels, const std::vector<long>& order,
                    const Evaluate& evaluate) {
  std::vector<int> index;
  for (long flat : order) {
    if (labels.known(flat)) continue;
    grid.unflatten(flat, index);
    evaluate(flat, index);
  }
}

std::vector<long> l1_order(const Grid& grid) {
  std::vector<long> order(static_cast<std::size_t>(grid.size()));
  std::iota(order.begin(), order.end(), 0L);
  std::vector<double> sums(order.size());
  for (long f = 0; f < grid.size(); ++f) sums[f] = grid.point(f).sum();
  std::stable_sort(order.begin(), order.end(), [&](long a, long b) { return sums[a] > sums[b]; });
  return order;
}

std::vector<long> shuffled_order(const Grid& grid, std::uint64_t seed) {
  std::vector<long> order(static_cast<std::size_t>(grid.size()));
  std::iota(order.begin(), order.end(), 0L);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

void traverse(const Grid& grid, Labeler& labels, const AlgorithmOptions& options,
              const Evaluate& evaluate) {
  switch (options.traversal) {
    case Traversal::kLineBisection:
      traverse_lines(grid, labels, evaluate);
      return;
    case Traversal::kL1Descending:
      traverse_order(grid, labels, l1_order(grid), evaluate);
      return;
    case Traversal::kShuffled:
      traverse_order(grid, labels, shuffled_order(grid, options.shuffle_seed), evaluate);
      return;
  }
}

ApproxSet assemble(const Grid& grid, Labeler& labels, long evaluations, const char* algo) {
  ApproxSet out;
  out.feasible = true;
  out.epsilon = grid.epsilon();
  out.box = CapitalBox{grid.lo(), grid.hi()};
  out.ideal = grid.lo();
  out.stats.grid_points = grid.size();
  out.stats.evaluations = evaluations;
  if (labels.conflicts() > 0) {
    log::emit(log::Level::kWarn, "label_conflicts", {{"algorithm", algo}, {"count", labels.conflicts()}});
  }
  const std::vector<signed char> final_labels = labels.release();
  out.stats.accepted = std::count(final_labels.begin(), final_labels.end(), 1);
  out.generators = minimal_points(grid, final_labels);
  log::emit(log::Level::kInfo, "approx_set",
            {{"algorithm", algo}, {"grid_points", out.stats.grid_points},
             {"evaluations", evaluations}, {"generators", out.generators.size()}});
  return out;
}

ApproxSet infeasible_set(double epsilon) {
  ApproxSet out;
  out.epsilon = epsilon;
  return out;
}

double directed(const std::vector<Vector>& from, const std::vector<Vector>& to) {
  double worst = 0.0;
  for (const Vector& a : from) worst = std::max(worst, distance_probe(a, to));
  return worst;
}

}  // namespace

Membership membership(const Instance& inst, const Vector& z) {
  const kernels::ViolationCount c = kernels::count_violations(
      inst.net, inst.grouping, inst.scenarios, z, inst.spec.alpha);
  const int count = inst.scenarios.count();
  return {c.nonnegative && c.violations <= inst.spec.max_violations(count),
          static_cast<double>(c.violations) / count};
}

Traversal parse_traversal(const std::string& name) {
  if (name == "lines") return Traversal::kLineBisection;
  if (name == "l1") return Traversal::kL1Descending;
  if (name == "shuffled") return Traversal::kShuffled;
  throw ValidationError("unknown traversal '" + name + "' (lines, l1, shuffled)");
}

std::string to_string(Traversal t) {
  switch (t) {
    case Traversal::kLineBisection:
      return "lines";
    case Traversal::kL1Descending:
      return "l1";
    case Traversal::kShuffled:
      return "shuffled";
  }
  return "lines";
}

std::optional<Grid> algorithm_grid(const Instance& inst, double epsilon,
                                   const AlgorithmOptions& options) {
  validate(inst);
  if (provably_infeasible(inst)) return std::nullopt;
  if (options.grid_box) return Grid(options.grid_box->lo, options.grid_box->hi, epsilon);
  const IdealPoint ideal = ideal_point(inst, options.ideal_method);
  if (!ideal.feasible) return std::nullopt;
  const CapitalBox box = z_bounds(inst.net, inst.grouping, inst.scenarios);
  return Grid(ideal.z.cwiseMin(box.hi), box.hi, epsilon);
}

ApproxSet algorithm1(const Instance& inst, double epsilon, const AlgorithmOptions& options) {
  const std::optional<Grid> grid = algorithm_grid(inst, epsilon, options);
  if (!grid) return infeasible_set(epsilon);
  Labeler labels(*grid);
  long evaluations = 0;
  traverse(*grid, labels, options, [&](long, const std::vector<int>& index) {
    ++evaluations;
    if (membership(inst, grid->point(index)).accepted) labels.mark_upper(index);
    else labels.mark_lower(index);
  });
  return assemble(*grid, labels, evaluations, "algorithm1");
}

ApproxSet algorithm2(const Instance& inst, double epsilon, const AlgorithmOptions& options) {
  const std::optional<Grid> grid = algorithm_grid(inst, epsilon, options);
  if (!grid) return infeasible_set(epsilon);
  Labeler labels(*grid);
  long evaluations = 0;
  traverse(*grid, labels, options, [&](long flat, const std::vector<int>& index) {
    ++evaluations;
    const Vector z = grid->point(index);
    const ScalarResult r = norm_min(inst, z, options.mip);
    if (r.feasible && r.value == 0.0) {
      labels.mark_upper(index);
      return;
    }
    if (!r.feasible || !r.optimal) {
      // Fall back to a plain membership decision for this point.
      if (membership(inst, z).accepted) labels.mark_upper(index);
      else labels.mark_lower(index);
      return;
    }
    labels.set(flat, 0);
    labels.mark_above(r.z);
    labels.mark_ball(z, r.bound - kBallMargin);
  });
  return assemble(*grid, labels, evaluations, "algorithm2");
}

std::vector<signed char> classify_exhaustive(const Instance& inst, const Grid& grid) {
  RowMatrix points(grid.size(), grid.dim());
  for (long f = 0; f < grid.size(); ++f) points.row(f) = grid.point(f).transpose();
  const std::vector<char> flags =
      kernels::classify(inst.net, inst.grouping, inst.scenarios, inst.spec, points);
  return std::vector<signed char>(flags.begin(), flags.end());
}

std::vector<Vector> minimal_points(const Grid& grid, const std::vector<signed char>& labels) {
  std::vector<Vector> out;
  std::vector<int> index;
  for (long f = 0; f < grid.size(); ++f) {
    if (labels[f] != 1) continue;
    grid.unflatten(f, index);
    bool minimal = true;
    for (int j = 0; j < grid.dim() && minimal; ++j) {
      if (index[j] == grid.last(j)) continue;
      ++index[j];
      if (labels[grid.flatten(index)] == 1) minimal = false;
      --index[j];
    }
    if (minimal) out.push_back(grid.point(index));
  }
  return out;
}

double hausdorff(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.empty() || b.empty()) throw ValidationError("Hausdorff distance needs nonempty sets");
  return std::max(directed(a, b), directed(b, a));
}

double hausdorff(const ApproxSet& a, const ApproxSet& b) {
  return hausdorff(a.generators, b.generators);
}

double distance_probe(const Vector& v, const std::vector<Vector>& generators) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vector& a : generators) best = std::min(best, (a - v).cwiseMax(0.0).norm());
  return best;
}

double distance_probe(const Vector& v, const ApproxSet& set) {
  return distance_probe(v, set.generators);
}

double insensitive_saa(const Vector& aggregates, const RiskSpec& spec) {
  if (aggregates.size() == 0) throw ValidationError("insensitive SAA needs at least one aggregate");
  if (!aggregates.allFinite()) throw ValidationError("aggregates must be finite");
  spec.validate();
  const int count = static_cast<int>(aggregates.size());
  const int k = spec.max_violations(count);
  if (k >= count) return -std::numeric_limits<double>::infinity();
  std::vector<double> sorted(aggregates.data(), aggregates.data() + count);
  std::nth_element(sorted.begin(), sorted.begin() + k, sorted.end());
  return spec.alpha - sorted[k];
}

}  // namespace sysvar::saa
