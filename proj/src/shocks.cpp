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

#include "sysvar/shocks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/rng.hpp"

namespace sysvar::shocks {

void ShockParams::validate() const {
  if (!(nu > 1.0) || !std::isfinite(nu)) throw ValidationError("nu must exceed 1");
  if (!(rho >= 0.0 && rho < 1.0)) throw ValidationError("rho must lie in [0,1)");
  if (count < 1) throw ValidationError("sample count must be positive");
  if (beta_by_group.empty()) throw ValidationError("beta needs one scale per group");
  for (double b : beta_by_group) {
    if (!(b > 0.0) || !std::isfinite(b)) throw ValidationError("beta entries must be positive");
  }
}

Vector latent_normals(const ShockParams& params, int dimension, int n) {
  std::mt19937_64 rng = substream(params.seed, static_cast<std::uint64_t>(n));
  const double common = standard_normal(rng);
  const double a = std::sqrt(params.rho);
  const double b = std::sqrt(1.0 - params.rho);
  Vector out(dimension);
  for (int i = 0; i < dimension; ++i) out(i) = a * common + b * standard_normal(rng);
  return out;
}

double lomax_from_upper_tail(double q, double nu, double beta) {
  // x = beta((1-u)^(-1/nu) - 1); expm1/log keep precision for q near 1.
  return beta * std::expm1(-std::log(q) / nu);
}

double lomax_cdf(double x, double nu, double beta) {
  if (x <= 0.0) return 0.0;
  return 1.0 - std::pow(beta / (beta + x), nu);
}

ScenarioSet sample_shocks(const ShockParams& params, const Grouping& grouping) {
  params.validate();
  grouping.validate();
  if (static_cast<int>(params.beta_by_group.size()) != grouping.g) {
    throw ValidationError("beta has " + std::to_string(params.beta_by_group.size()) +
                          " entries but grouping has " + std::to_string(grouping.g) + " groups");
  }
  const int d = grouping.size();
  ScenarioSet out{RowMatrix(params.count, d)};
#pragma omp parallel for schedule(static)
  for (int n = 0; n < params.count; ++n) {
    const Vector latent = latent_normals(params, d, n);
    for (int i = 0; i < d; ++i) {
      // Upper tail 1 - Phi(z) = erfc(z / sqrt 2) / 2 without cancellation.
      const double q = std::max(0.5 * std::erfc(latent(i) / std::sqrt(2.0)),
                                std::numeric_limits<double>::min());
      const double beta = params.beta_by_group[static_cast<std::size_t>(grouping.assignment[i])];
      out.values(n, i) = std::max(0.0, lomax_from_upper_tail(q, params.nu, beta));
    }
  }
  return out;
}

}  // namespace sysvar::shocks
