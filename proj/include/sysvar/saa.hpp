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

#ifndef SYSVAR_SAA_HPP_
#define SYSVAR_SAA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sysvar/grid.hpp"
#include "sysvar/mip.hpp"
#include "sysvar/scalarize.hpp"
#include "sysvar/types.hpp"

namespace sysvar::saa {

struct Membership {
  bool accepted = false;
  double violation_fraction = 0.0;
};

Membership membership(const Instance& inst, const Vector& z);

enum class Traversal {
  kLineBisection,  // bisect along the last coordinate, one line at a time
  kL1Descending,   // decreasing coordinate sum, starting at the upper corner
  kShuffled,       // seeded random permutation
};

Traversal parse_traversal(const std::string& name);
std::string to_string(Traversal t);

struct AlgorithmOptions {
  Traversal traversal = Traversal::kLineBisection;
  std::uint64_t shuffle_seed = 0;
  // Grid corners; defaults to [ideal point, z_hi].
  std::optional<CapitalBox> grid_box;
  IdealMethod ideal_method = IdealMethod::kAuto;
  optim::MipOptions mip;
};

struct ApproxStats {
  long grid_points = 0;
  long evaluations = 0;  // membership or norm-min calls
  long accepted = 0;     // grid points classified acceptable
};

// Upper set generated by finitely many points: union of a + R^g_+.
struct ApproxSet {
  bool feasible = false;
  double epsilon = 0.0;
  CapitalBox box;
  Vector ideal;
  std::vector<Vector> generators;
  ApproxStats stats;
};

// Per-point labels of a grid: 1 acceptable, 0 not acceptable.
struct Classification {
  std::vector<signed char> labels;
  long evaluations = 0;
};

// Membership with upper-cone / lower-cone propagation.
ApproxSet algorithm1(const Instance& inst, double epsilon, const AlgorithmOptions& options = {});
// Norm-minimizing scalarizations with upper-cone / ball propagation.
ApproxSet algorithm2(const Instance& inst, double epsilon, const AlgorithmOptions& options = {});

// Grid used by both algorithms for the given options; nullopt if infeasible.
std::optional<Grid> algorithm_grid(const Instance& inst, double epsilon,
                                   const AlgorithmOptions& options);

// Evaluates membership at every grid point (OpenMP over points).
std::vector<signed char> classify_exhaustive(const Instance& inst, const Grid& grid);

// Minimal acceptable points of a fully labeled grid, in flat-index order.
std::vector<Vector> minimal_points(const Grid& grid, const std::vector<signed char>& labels);

double hausdorff(const ApproxSet& a, const ApproxSet& b);
double hausdorff(const std::vector<Vector>& a, const std::vector<Vector>& b);

// Distance from v to the upper set; +inf for an empty set.
double distance_probe(const Vector& v, const ApproxSet& set);
double distance_probe(const Vector& v, const std::vector<Vector>& generators);

// Smallest y with #{n : aggregates_n + y < alpha} <= floor(lambda N).
double insensitive_saa(const Vector& aggregates, const RiskSpec& spec);

}  // namespace sysvar::saa

#endif  // SYSVAR_SAA_HPP_
