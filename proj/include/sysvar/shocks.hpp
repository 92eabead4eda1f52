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

#ifndef SYSVAR_SHOCKS_HPP_
#define SYSVAR_SHOCKS_HPP_

#include <cstdint>
#include <vector>

#include "sysvar/types.hpp"

namespace sysvar::shocks {

/// Lomax (Pareto type II) marginals with shape `nu` and a scale per group,
/// coupled by an equicorrelated Gaussian copula.
struct ShockParams {
  double nu = 3.0;
  std::vector<double> beta_by_group;
  double rho = 0.0;
  int count = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Scenario n depends only on (seed, n), so a larger sample extends a smaller
/// one. Rows are generated in parallel.
ScenarioSet sample_shocks(const ShockParams& params, const Grouping& grouping);

// Latent standard normals of scenario n (before the marginal transform).
Vector latent_normals(const ShockParams& params, int dimension, int n);

// Inverse CDF of Lomax(nu, beta) evaluated at upper tail probability q = 1 - u.
double lomax_from_upper_tail(double q, double nu, double beta);

double lomax_cdf(double x, double nu, double beta);

}  // namespace sysvar::shocks

#endif  // SYSVAR_SHOCKS_HPP_
