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

#ifndef SYSVAR_GRID_HPP_
#define SYSVAR_GRID_HPP_

#include <functional>
#include <vector>

#include "sysvar/types.hpp"

namespace sysvar::saa {

inline constexpr long kMaxGridPoints = 20'000'000;

// Lattice anchored at the upper corner: along coordinate j, index k maps to
// hi_j - k*step for k < last_j and to lo_j at k = last_j, with step = eps/sqrt(g).
// Larger indices therefore mean smaller coordinates.
class Grid {
 public:
  Grid(Vector lo, Vector hi, double epsilon);

  int dim() const { return static_cast<int>(lo_.size()); }
  double step() const { return step_; }
  double epsilon() const { return epsilon_; }
  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  int last(int j) const { return last_[j]; }
  long size() const { return size_; }

  double coordinate(int j, int k) const;
  Vector point(const std::vector<int>& index) const;
  Vector point(long flat) const;

  long flatten(const std::vector<int>& index) const;
  void unflatten(long flat, std::vector<int>& index) const;

  // Largest index whose coordinate is >= value, or -1 when none is.
  int last_at_least(int j, double value) const;
  // Smallest index whose coordinate is <= value, or last+1 when none is.
  int first_at_most(int j, double value) const;

  // Visits every index in the box [from, to] (inclusive, componentwise).
  void for_each(const std::vector<int>& from, const std::vector<int>& to,
                const std::function<void(long, const std::vector<int>&)>& fn) const;

 private:
  Vector lo_, hi_;
  double epsilon_ = 0.0;
  double step_ = 0.0;
  std::vector<int> last_;
  std::vector<long> stride_;
  long size_ = 0;
};

}  // namespace sysvar::saa

#endif  // SYSVAR_GRID_HPP_
