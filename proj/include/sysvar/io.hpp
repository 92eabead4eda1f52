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

#ifndef SYSVAR_IO_HPP_
#define SYSVAR_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sysvar/convergence.hpp"
#include "sysvar/netgen.hpp"
#include "sysvar/saa.hpp"
#include "sysvar/types.hpp"

namespace sysvar::io {

using nlohmann::json;

// Shortest text that parses back to the same double (C locale).
std::string format_double(double v);

std::string read_file(const std::string& path);
// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

// Comma-separated list of doubles ("1,2.5,3").
std::vector<double> parse_list(const std::string& text);
Vector parse_vector(const std::string& text);

struct NetworkFile {
  FinancialNetwork network;
  Grouping grouping;
  std::optional<Matrix> adjacency;
};

json network_to_json(const FinancialNetwork& net, const Grouping& grouping,
                     const Matrix* adjacency = nullptr);
NetworkFile network_from_json(const json& doc);

std::string edges_to_csv(const netgen::DirectedMultigraph& graph);

std::string scenarios_to_csv(const ScenarioSet& scenarios);
ScenarioSet scenarios_from_csv(const std::string& text);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& doc);

json approx_set_to_json(const saa::ApproxSet& set);
saa::ApproxSet approx_set_from_json(const json& doc);

std::string convergence_to_csv(const saa::ConvergenceTable& table);

// For g = 2: the staircase boundary of the upper set generated by `set`, as
// "z1,z2" rows from the top-left end to the bottom-right end.
std::string staircase_csv(const saa::ApproxSet& set);

}  // namespace sysvar::io

#endif  // SYSVAR_IO_HPP_
