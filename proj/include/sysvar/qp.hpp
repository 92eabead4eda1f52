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

#ifndef SYSVAR_OPTIM_QP_HPP_
#define SYSVAR_OPTIM_QP_HPP_

#include "sysvar/types.hpp"

namespace sysvar::optim {

inline constexpr int kMaxQpDim = 4;

struct QpResult {
  Vector z;
  double distance = 0.0;
  // Max of primal violation and negative multiplier part at the returned point.
  double kkt_residual = 0.0;
  int rounds = 0;
};

// Euclidean projection of v onto {z : A z <= b, lo <= z <= hi}.
// Throws InfeasibleError for an empty region and CapacityError for dim > kMaxQpDim.
QpResult min_norm_qp(const Vector& v, const RowMatrix& a, const Vector& b, const Vector& lo,
                     const Vector& hi);

}  // namespace sysvar::optim

#endif  // SYSVAR_OPTIM_QP_HPP_
