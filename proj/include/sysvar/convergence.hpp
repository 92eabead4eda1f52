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

#ifndef SYSVAR_CONVERGENCE_HPP_
#define SYSVAR_CONVERGENCE_HPP_

#include <vector>

#include "sysvar/saa.hpp"
#include "sysvar/shocks.hpp"
#include "sysvar/types.hpp"

namespace sysvar::saa {

struct ConvergenceConfig {
  std::vector<int> sample_sizes;
  int reference_size = 400;
  int seeds = 10;
  double epsilon = 10.0;
  // Probe points for the distance functions; defaults to f * z_hi for f in {0, 0.25, 0.5}.
  std::vector<Vector> probes;
  AlgorithmOptions algorithm;
};

struct ConvergenceRow {
  bool median = false;
  std::uint64_t seed = 0;
  int sample_size = 0;
  double hausdorff_to_ref = 0.0;  // NaN when either set is empty
  std::vector<double> probes;
};

struct ConvergenceTable {
  std::vector<Vector> probes;
  std::vector<ConvergenceRow> rows;  // per-seed rows, then one median row per sample size
};

// Seed s of the study draws its reference sample with shocks.seed + s; the
// smaller samples are prefixes of that reference sample.
ConvergenceTable convergence_study(const FinancialNetwork& net, const Grouping& grouping,
                                   const shocks::ShockParams& shocks, const RiskSpec& spec,
                                   const ConvergenceConfig& config);

}  // namespace sysvar::saa

#endif  // SYSVAR_CONVERGENCE_HPP_
