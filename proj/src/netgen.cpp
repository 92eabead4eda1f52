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

#include "sysvar/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sysvar/errors.hpp"
#include "sysvar/rng.hpp"

namespace sysvar::netgen {
namespace {

// Draws an index with probability proportional to degree[i] + delta.
int sample_node(const std::vector<int>& degree, double delta, int edge_count,
                std::mt19937_64& rng) {
  const int n = static_cast<int>(degree.size());
  const double total = edge_count + delta * n;
  double u = uniform01(rng) * total;
  for (int i = 0; i < n; ++i) {
    u -= degree[static_cast<std::size_t>(i)] + delta;
    if (u < 0.0) return i;
  }
  // Rounding left a sliver of mass past the last node.
  for (int i = n - 1; i >= 0; --i) {
    if (degree[static_cast<std::size_t>(i)] + delta > 0.0) return i;
  }
  return n - 1;
}

std::vector<bool> choose_core(const Matrix& adjacency, int core_size) {
  const int d = static_cast<int>(adjacency.rows());
  std::vector<double> degree(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) degree[i] = adjacency.row(i).sum() + adjacency.col(i).sum();
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<bool> core(static_cast<std::size_t>(d), false);
  for (int k = 0; k < core_size; ++k) core[order[k]] = true;
  return core;
}

}  // namespace

void BollobasParams::validate() const {
  for (double p : {theta, eta, zeta}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("rule probabilities must lie in [0,1]");
  }
  if (std::abs(theta + eta + zeta - 1.0) > 1e-12) {
    throw ValidationError("theta + eta + zeta must equal 1");
  }
  if (!(delta_in >= 0.0) || !(delta_out >= 0.0)) {
    throw ValidationError("delta_in and delta_out must be nonnegative");
  }
  if (target_nodes < 1) throw ValidationError("target_nodes must be at least 1");
  if (target_nodes > 1 && theta + zeta == 0.0) {
    throw ValidationError("theta + zeta = 0 never adds nodes");
  }
}

DirectedMultigraph generate_bollobas(const BollobasParams& params) {
  params.validate();
  std::mt19937_64 rng = substream(params.seed, 0);

  // Initial graph: one node carrying a self-loop.
  DirectedMultigraph graph;
  graph.n = 1;
  graph.edges.emplace_back(0, 0);
  std::vector<int> in_degree{1};
  std::vector<int> out_degree{1};

  while (graph.n < params.target_nodes) {
    const int t = static_cast<int>(graph.edges.size());
    const double u = uniform01(rng);
    if (u < params.theta) {
      const int w = sample_node(in_degree, params.delta_in, t, rng);
      const int v = graph.n++;
      in_degree.push_back(0);
      out_degree.push_back(1);
      ++in_degree[w];
      graph.edges.emplace_back(v, w);
      ++graph.rule_counts[0];
    } else if (u < params.theta + params.eta) {
      const int v = sample_node(out_degree, params.delta_out, t, rng);
      const int w = sample_node(in_degree, params.delta_in, t, rng);
      ++out_degree[v];
      ++in_degree[w];
      graph.edges.emplace_back(v, w);
      ++graph.rule_counts[1];
    } else {
      const int v = sample_node(out_degree, params.delta_out, t, rng);
      const int w = graph.n++;
      in_degree.push_back(1);
      out_degree.push_back(0);
      ++out_degree[v];
      graph.edges.emplace_back(v, w);
      ++graph.rule_counts[2];
    }
  }
  return graph;
}

Matrix simple_adjacency(const DirectedMultigraph& graph) {
  Matrix a = Matrix::Zero(graph.n, graph.n);
  for (const auto& [s, t] : graph.edges) {
    if (s < 0 || t < 0 || s >= graph.n || t >= graph.n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (s != t) a(s, t) = 1.0;
  }
  return a;
}

void IntergroupLiabilityMatrix::validate() const {
  if (m.rows() < 1 || m.rows() != m.cols()) throw ValidationError("M must be square");
  if ((m.array() < 0.0).any()) throw ValidationError("M entries must be nonnegative");
}

LiabilityStructure build_liabilities(const DirectedMultigraph& graph, int core_size,
                                     const IntergroupLiabilityMatrix& m,
                                     const LiabilityOptions& options) {
  return build_liabilities(simple_adjacency(graph), core_size, m, options);
}

LiabilityStructure build_liabilities(const Matrix& adjacency, int core_size,
                                     const IntergroupLiabilityMatrix& m,
                                     const LiabilityOptions& options) {
  m.validate();
  const int d = static_cast<int>(adjacency.rows());
  if (adjacency.cols() != d) throw ValidationError("adjacency must be square");
  if (m.m.rows() != 2) throw ValidationError("core/periphery split needs a 2x2 M");
  if (core_size < 1 || core_size >= d) {
    throw ValidationError("core_size must lie in [1, d)");
  }
  if ((adjacency.array() != 0.0).count() == 0) {
    throw ValidationError("adjacency has no links; every institution lacks obligations");
  }

  const std::vector<bool> core = choose_core(adjacency, core_size);
  Grouping grouping{2, std::vector<int>(static_cast<std::size_t>(d))};
  for (int i = 0; i < d; ++i) grouping.assignment[i] = core[i] ? 0 : 1;

  Matrix l = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j && adjacency(i, j) != 0.0) {
        l(i, j) = m.m(grouping.assignment[i], grouping.assignment[j]);
      }
    }
  }

  LiabilityStructure out;
  Vector degree(d);
  for (int i = 0; i < d; ++i) degree(i) = adjacency.row(i).sum() + adjacency.col(i).sum();
  double min_positive = std::numeric_limits<double>::infinity();
  for (int a = 0; a < m.m.rows(); ++a) {
    for (int b = 0; b < m.m.cols(); ++b) {
      if (m.m(a, b) > 0.0) min_positive = std::min(min_positive, m.m(a, b));
    }
  }
  for (int i = 0; i < d; ++i) {
    if (l.row(i).sum() > 0.0) continue;
    if (!options.repair || !std::isfinite(min_positive)) {
      throw ValidationError("institution " + std::to_string(i) + " has no obligations");
    }
    // Highest-degree member of the other group, lower index on ties.
    int target = -1;
    for (int j = 0; j < d; ++j) {
      if (j == i || grouping.assignment[j] == grouping.assignment[i]) continue;
      if (target < 0 || degree(j) > degree(target)) target = j;
    }
    l(i, target) = min_positive;
    out.repaired.emplace_back(i, target);
  }

  out.network.pbar = l.rowwise().sum();
  out.network.pi = l.array().colwise() / out.network.pbar.array();
  out.network.validate();
  out.grouping = std::move(grouping);
  out.adjacency = adjacency;
  return out;
}

double total_clustering(const Matrix& adjacency) {
  const int d = static_cast<int>(adjacency.rows());
  Matrix u = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j && (adjacency(i, j) != 0.0 || adjacency(j, i) != 0.0)) u(i, j) = 1.0;
    }
  }
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    std::vector<int> nb;
    for (int j = 0; j < d; ++j) {
      if (u(i, j) != 0.0) nb.push_back(j);
    }
    const std::size_t k = nb.size();
    if (k < 2) continue;
    int links = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (u(nb[a], nb[b]) != 0.0) ++links;
      }
    }
    total += 2.0 * links / static_cast<double>(k * (k - 1));
  }
  return total;
}

double core_periphery_error(const Matrix& adjacency, const std::vector<bool>& is_core) {
  const int d = static_cast<int>(adjacency.rows());
  double links = 0.0;
  double errors = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool present = adjacency(i, j) != 0.0;
      if (present) links += 1.0;
      if (is_core[i] && is_core[j] && !present) errors += 1.0;
      if (!is_core[i] && !is_core[j] && present) errors += 1.0;
    }
  }
  if (links == 0.0) throw ValidationError("core-periphery error undefined without links");
  return errors / links;
}

NetworkStats network_stats(const Matrix& adjacency, const Grouping& grouping) {
  const int d = static_cast<int>(adjacency.rows());
  if (adjacency.cols() != d || grouping.size() != d) {
    throw ValidationError("adjacency and grouping dimensions differ");
  }
  for (int i = 0; i < d; ++i) {
    if (adjacency(i, i) != 0.0) throw ValidationError("adjacency must have a zero diagonal");
  }
  const double links = (adjacency.array() != 0.0).count();
  if (links == 0.0) throw ValidationError("network statistics undefined without links");

  std::vector<bool> core(static_cast<std::size_t>(d));
  double pp = 0.0;
  for (int i = 0; i < d; ++i) core[i] = grouping.assignment[i] == 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!core[i] && !core[j] && adjacency(i, j) != 0.0) pp += 1.0;
    }
  }

  NetworkStats s;
  s.avg_degree = links / d;
  s.density = d > 1 ? links / (static_cast<double>(d) * (d - 1)) : 0.0;
  s.total_clustering = total_clustering(adjacency);
  s.cpe = core_periphery_error(adjacency, core);
  s.cpi = (links - pp) / links;
  return s;
}

}  // namespace sysvar::netgen
