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

#include "sysvar/types.hpp"

#include <cmath>
#include <string>

#include "sysvar/errors.hpp"

namespace sysvar {

void FinancialNetwork::validate() const {
  const int d = size();
  if (d < 1) throw ValidationError("network must have at least one node");
  if (pi.rows() != d || pi.cols() != d) {
    throw ValidationError("pi must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  for (int i = 0; i < d; ++i) {
    if (!(pbar(i) > 0.0) || !std::isfinite(pbar(i))) {
      throw ValidationError("pbar[" + std::to_string(i) + "] must be positive and finite");
    }
    if (pi(i, i) != 0.0) throw ValidationError("pi must have a zero diagonal");
    double row = 0.0;
    for (int j = 0; j < d; ++j) {
      if (!(pi(i, j) >= 0.0)) throw ValidationError("pi entries must be nonnegative");
      row += pi(i, j);
    }
    if (std::abs(row - 1.0) > 1e-9) {
      throw ValidationError("row " + std::to_string(i) + " of pi does not sum to 1");
    }
  }
}

std::vector<int> Grouping::group_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(g), 0);
  for (int a : assignment) ++sizes[static_cast<std::size_t>(a)];
  return sizes;
}

std::vector<std::vector<int>> Grouping::members() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(assignment[i])].push_back(i);
  return out;
}

Matrix Grouping::matrix() const {
  Matrix b = Matrix::Zero(g, size());
  for (int i = 0; i < size(); ++i) b(assignment[i], i) = 1.0;
  return b;
}

Vector Grouping::inject(const Vector& z) const {
  Vector out(size());
  for (int i = 0; i < size(); ++i) out(i) = z(assignment[i]);
  return out;
}

Vector Grouping::collect(const Vector& v) const {
  Vector out = Vector::Zero(g);
  for (int i = 0; i < size(); ++i) out(assignment[i]) += v(i);
  return out;
}

void Grouping::validate() const {
  if (g < 1) throw ValidationError("grouping needs at least one group");
  if (assignment.empty()) throw ValidationError("grouping assigns no institutions");
  for (int a : assignment) {
    if (a < 0 || a >= g) throw ValidationError("group index out of range");
  }
  for (int s : group_sizes()) {
    if (s == 0) throw ValidationError("every group must be nonempty");
  }
}

Grouping Grouping::single(int d) {
  return Grouping{1, std::vector<int>(static_cast<std::size_t>(d), 0)};
}

Grouping Grouping::singletons(int d) {
  Grouping out{d, std::vector<int>(static_cast<std::size_t>(d))};
  for (int i = 0; i < d; ++i) out.assignment[static_cast<std::size_t>(i)] = i;
  return out;
}

ScenarioSet ScenarioSet::head(int n) const {
  if (n < 0 || n > count()) throw ValidationError("scenario head out of range");
  return ScenarioSet{values.topRows(n)};
}

void RiskSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be positive");
  if (!(lambda > 0.0 && lambda < 1.0)) throw ValidationError("lambda must lie in (0,1)");
}

int RiskSpec::max_violations(int scenario_count) const {
  // The small slack absorbs lambda values such as 0.1*3 that land one ulp
  // below an exact multiple of 1/N.
  return static_cast<int>(std::floor(lambda * scenario_count + 1e-9));
}

}  // namespace sysvar
