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

#ifndef SYSVAR_NETGEN_HPP_
#define SYSVAR_NETGEN_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sysvar/types.hpp"

namespace sysvar::netgen {

/// Directed preferential attachment parameters. Each step performs rule (i)
/// "new source node", (ii) "edge between existing nodes" or (iii) "new target
/// node" with probabilities theta, eta, zeta.
struct BollobasParams {
  double theta = 0.2;
  double eta = 0.6;
  double zeta = 0.2;
  double delta_in = 0.5;
  double delta_out = 0.5;
  int target_nodes = 20;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DirectedMultigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (source, target); loops and repeats allowed
  // Number of steps that applied rule (i), (ii), (iii). The initial self-loop
  // is not counted.
  std::array<int, 3> rule_counts{0, 0, 0};
};

DirectedMultigraph generate_bollobas(const BollobasParams& params);

/// Simple 0/1 adjacency: A_ij = 1 iff some edge i->j with i != j.
Matrix simple_adjacency(const DirectedMultigraph& graph);

/// Per-edge nominal liabilities between groups; entry (a, b) applies to an
/// edge from a node of group a to a node of group b. Group 0 is the core.
struct IntergroupLiabilityMatrix {
  Matrix m;
  void validate() const;
};

struct LiabilityOptions {
  // Give institutions without interbank obligations a single liability so
  // that pbar stays strictly positive.
  bool repair = true;
};

struct LiabilityStructure {
  FinancialNetwork network;
  Grouping grouping;
  Matrix adjacency;                              // simple adjacency the liabilities were built from
  std::vector<std::pair<int, int>> repaired;     // liabilities added by the repair rule
};

/// Core = top `core_size` nodes by total degree in the simple adjacency (ties
/// to the lower index), assigned group 0; everyone else is group 1.
LiabilityStructure build_liabilities(const DirectedMultigraph& graph, int core_size,
                                     const IntergroupLiabilityMatrix& m,
                                     const LiabilityOptions& options = {});

/// Same as above starting from an explicit 0/1 adjacency.
LiabilityStructure build_liabilities(const Matrix& adjacency, int core_size,
                                     const IntergroupLiabilityMatrix& m,
                                     const LiabilityOptions& options = {});

struct NetworkStats {
  double avg_degree = 0.0;
  double density = 0.0;
  double total_clustering = 0.0;
  double cpe = 0.0;
  double cpi = 0.0;
};

/// Group 0 of `grouping` is read as the core. Throws ValidationError when the
/// adjacency has no edges (CPI and CPE are undefined).
NetworkStats network_stats(const Matrix& adjacency, const Grouping& grouping);

// Block-model error of a core/periphery split: missing core-core links plus
// present periphery-periphery links, relative to the number of links.
double core_periphery_error(const Matrix& adjacency, const std::vector<bool>& is_core);

// Sum of undirected local clustering coefficients of the symmetrized graph.
double total_clustering(const Matrix& adjacency);

}  // namespace sysvar::netgen

#endif  // SYSVAR_NETGEN_HPP_
