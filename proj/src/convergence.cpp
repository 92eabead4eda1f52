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

#include "sysvar/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/parallel.hpp"
#include "sysvar/scalarize.hpp"

namespace sysvar::saa {
namespace {

double median_of(std::vector<double> values) {
  values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }),
               values.end());
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

}  // namespace

ConvergenceTable convergence_study(const FinancialNetwork& net, const Grouping& grouping,
                                   const shocks::ShockParams& shocks, const RiskSpec& spec,
                                   const ConvergenceConfig& config) {
  if (config.sample_sizes.empty()) throw ValidationError("sample size list is empty");
  if (config.seeds < 1) throw ValidationError("seed count must be positive");
  for (int n : config.sample_sizes) {
    if (n < 1 || n > config.reference_size) {
      throw ValidationError("every sample size must lie in [1, reference size]");
    }
  }
  net.validate();
  grouping.validate();
  spec.validate();

  ConvergenceTable table;
  const Vector hi = z_bounds(net, grouping, ScenarioSet{RowMatrix::Zero(1, net.size())}).hi;
  table.probes = config.probes;
  if (table.probes.empty()) {
    for (double f : {0.0, 0.25, 0.5}) table.probes.push_back(f * hi);
  }

  const int seeds = config.seeds;
  std::vector<ScenarioSet> samples(static_cast<std::size_t>(seeds));
  for (int s = 0; s < seeds; ++s) {
    shocks::ShockParams p = shocks;
    p.count = config.reference_size;
    p.seed = shocks.seed + static_cast<std::uint64_t>(s);
    samples[s] = shocks::sample_shocks(p, grouping);
  }

  // One cell per (seed, size); the last column of each seed is the reference.
  const int columns = static_cast<int>(config.sample_sizes.size()) + 1;
  std::vector<ApproxSet> sets(static_cast<std::size_t>(seeds * columns));
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int cell = 0; cell < seeds * columns; ++cell) {
    slot.run([&] {
      const int s = cell / columns;
      const int c = cell % columns;
      const int n = c + 1 == columns ? config.reference_size : config.sample_sizes[c];
      const ScenarioSet sample = samples[s].head(n);
      sets[cell] = algorithm1(Instance{net, grouping, sample, spec}, config.epsilon, config.algorithm);
    });
  }
  slot.rethrow();

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int s = 0; s < seeds; ++s) {
    const ApproxSet& ref = sets[s * columns + columns - 1];
    for (int c = 0; c + 1 < columns; ++c) {
      const ApproxSet& set = sets[s * columns + c];
      ConvergenceRow row;
      row.seed = shocks.seed + static_cast<std::uint64_t>(s);
      row.sample_size = config.sample_sizes[c];
      const bool ok = !set.generators.empty() && !ref.generators.empty();
      row.hausdorff_to_ref = ok ? hausdorff(set, ref) : nan;
      for (const Vector& v : table.probes) row.probes.push_back(ok ? distance_probe(v, set) : nan);
      table.rows.push_back(std::move(row));
    }
  }
  const std::size_t per_seed = table.rows.size();
  for (int c = 0; c + 1 < columns; ++c) {
    ConvergenceRow row;
    row.median = true;
    row.sample_size = config.sample_sizes[c];
    std::vector<double> h;
    std::vector<std::vector<double>> probes(table.probes.size());
    for (std::size_t r = 0; r < per_seed; ++r) {
      const ConvergenceRow& src = table.rows[r];
      if (src.sample_size != row.sample_size || (r % (columns - 1)) != static_cast<std::size_t>(c)) continue;
      h.push_back(src.hausdorff_to_ref);
      for (std::size_t p = 0; p < probes.size(); ++p) probes[p].push_back(src.probes[p]);
    }
    row.hausdorff_to_ref = median_of(h);
    for (auto& values : probes) row.probes.push_back(median_of(values));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace sysvar::saa
