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

#include "sysvar/grid.hpp"

#include <cmath>
#include <string>

#include "sysvar/errors.hpp"

namespace sysvar::saa {

Grid::Grid(Vector lo, Vector hi, double epsilon)
    : lo_(std::move(lo)), hi_(std::move(hi)), epsilon_(epsilon) {
  const int g = dim();
  if (g < 1 || hi_.size() != g) throw ValidationError("grid corners must share a positive dimension");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("epsilon must be positive");
  if (!lo_.allFinite() || !hi_.allFinite()) throw ValidationError("grid corners must be finite");
  if ((lo_.array() > hi_.array()).any()) throw ValidationError("grid has lo > hi");
  step_ = epsilon / std::sqrt(static_cast<double>(g));
  last_.resize(static_cast<std::size_t>(g));
  stride_.resize(static_cast<std::size_t>(g));
  double total = 1.0;
  for (int j = g - 1; j >= 0; --j) {
    const double span = (hi_(j) - lo_(j)) / step_;
    const double k = std::max(0.0, std::ceil(span - 1e-9));
    if (k > static_cast<double>(kMaxGridPoints)) throw CapacityError("grid too fine");
    last_[j] = static_cast<int>(k);
    stride_[j] = static_cast<long>(total);
    total *= k + 1.0;
    if (total > static_cast<double>(kMaxGridPoints)) {
      throw CapacityError("grid would hold more than " + std::to_string(kMaxGridPoints) +
                          " points; increase epsilon");
    }
  }
  size_ = static_cast<long>(total);
}

double Grid::coordinate(int j, int k) const {
  return k >= last_[j] ? lo_(j) : hi_(j) - k * step_;
}

Vector Grid::point(const std::vector<int>& index) const {
  Vector out(dim());
  for (int j = 0; j < dim(); ++j) out(j) = coordinate(j, index[j]);
  return out;
}

Vector Grid::point(long flat) const {
  std::vector<int> index;
  unflatten(flat, index);
  return point(index);
}

long Grid::flatten(const std::vector<int>& index) const {
  long flat = 0;
  for (int j = 0; j < dim(); ++j) flat += stride_[j] * index[j];
  return flat;
}

void Grid::unflatten(long flat, std::vector<int>& index) const {
  index.resize(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) {
    index[j] = static_cast<int>(flat / stride_[j]);
    flat %= stride_[j];
  }
}

int Grid::last_at_least(int j, double value) const {
  if (coordinate(j, 0) < value) return -1;
  int k = static_cast<int>(std::min<double>(last_[j], std::floor((hi_(j) - value) / step_)));
  k = std::max(k, 0);
  while (k < last_[j] && coordinate(j, k + 1) >= value) ++k;
  while (k > 0 && coordinate(j, k) < value) --k;
  return k;
}

int Grid::first_at_most(int j, double value) const {
  if (coordinate(j, last_[j]) > value) return last_[j] + 1;
  int k = static_cast<int>(std::max(0.0, std::ceil((hi_(j) - value) / step_)));
  k = std::min(k, last_[j]);
  while (k > 0 && coordinate(j, k - 1) <= value) --k;
  while (k < last_[j] && coordinate(j, k) > value) ++k;
  return k;
}

void Grid::for_each(const std::vector<int>& from, const std::vector<int>& to,
                    const std::function<void(long, const std::vector<int>&)>& fn) const {
  const int g = dim();
  for (int j = 0; j < g; ++j) {
    if (from[j] > to[j]) return;
  }
  std::vector<int> index = from;
  for (;;) {
    fn(flatten(index), index);
    int j = g - 1;
    while (j >= 0 && index[j] == to[j]) {
      index[j] = from[j];
      --j;
    }
    if (j < 0) return;
    ++index[j];
  }
}

}  // namespace sysvar::saa
