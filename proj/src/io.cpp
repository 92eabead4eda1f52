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

#include "sysvar/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "sysvar/errors.hpp"

namespace sysvar::io {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ValidationError("cannot parse number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& doc, int rows, int cols, const char* what) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != rows) {
    throw ValidationError(std::string(what) + " must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!doc[i].is_array() || static_cast<int>(doc[i].size()) != cols) {
      throw ValidationError(std::string(what) + " row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < cols; ++j) m(i, j) = doc[i][j].get<double>();
  }
  return m;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw SolverError("number formatting failed");
  return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw ValidationError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw ValidationError("cannot move output into '" + path + "': " + ec.message());
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& cell : split(text, ',')) out.push_back(parse_double(cell));
  if (out.empty()) throw ValidationError("empty number list");
  return out;
}

Vector parse_vector(const std::string& text) {
  const std::vector<double> values = parse_list(text);
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector vector_from_json(const json& doc) {
  if (!doc.is_array()) throw ValidationError("expected a JSON array of numbers");
  Vector v(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t i = 0; i < doc.size(); ++i) v(static_cast<Eigen::Index>(i)) = doc[i].get<double>();
  return v;
}

json network_to_json(const FinancialNetwork& net, const Grouping& grouping,
                     const Matrix* adjacency) {
  json doc;
  doc["d"] = net.size();
  doc["pbar"] = vector_to_json(net.pbar);
  doc["pi"] = matrix_to_json(net.pi);
  doc["grouping"] = {{"g", grouping.g}, {"assignment", grouping.assignment}};
  if (adjacency != nullptr) doc["adjacency"] = matrix_to_json(*adjacency);
  return doc;
}

NetworkFile network_from_json(const json& doc) {
  try {
    NetworkFile out;
    const int d = doc.at("d").get<int>();
    if (d < 1) throw ValidationError("network dimension must be positive");
    out.network.pbar = vector_from_json(doc.at("pbar"));
    if (out.network.pbar.size() != d) throw ValidationError("pbar length differs from d");
    out.network.pi = matrix_from_json(doc.at("pi"), d, d, "pi");
    if (doc.contains("grouping")) {
      out.grouping.g = doc["grouping"].at("g").get<int>();
      out.grouping.assignment = doc["grouping"].at("assignment").get<std::vector<int>>();
    } else {
      out.grouping = Grouping::single(d);
    }
    if (doc.contains("adjacency")) out.adjacency = matrix_from_json(doc["adjacency"], d, d, "adjacency");
    out.network.validate();
    out.grouping.validate();
    if (out.grouping.size() != d) throw ValidationError("grouping covers a different node count");
    return out;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed network JSON: ") + e.what());
  }
}

std::string edges_to_csv(const netgen::DirectedMultigraph& graph) {
  std::string out = "source,target\n";
  for (const auto& [s, t] : graph.edges) out += std::to_string(s) + "," + std::to_string(t) + "\n";
  return out;
}

std::string scenarios_to_csv(const ScenarioSet& scenarios) {
  std::string out;
  for (int i = 0; i < scenarios.dimension(); ++i) out += (i ? ",x" : "x") + std::to_string(i + 1);
  out += "\n";
  for (int n = 0; n < scenarios.count(); ++n) {
    for (int i = 0; i < scenarios.dimension(); ++i) {
      if (i) out += ",";
      out += format_double(scenarios.values(n, i));
    }
    out += "\n";
  }
  return out;
}

ScenarioSet scenarios_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("scenario CSV is empty");
  const int d = static_cast<int>(split(trim(line), ',').size());
  std::vector<double> values;
  int rows = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (static_cast<int>(cells.size()) != d) {
      throw ValidationError("scenario row " + std::to_string(rows + 1) + " has " +
                            std::to_string(cells.size()) + " columns, expected " + std::to_string(d));
    }
    for (const std::string& c : cells) values.push_back(parse_double(c));
    ++rows;
  }
  if (rows == 0) throw ValidationError("scenario CSV has no rows");
  ScenarioSet out{RowMatrix(rows, d)};
  std::copy(values.begin(), values.end(), out.values.data());
  return out;
}

json approx_set_to_json(const saa::ApproxSet& set) {
  json doc;
  doc["feasible"] = set.feasible;
  doc["epsilon"] = set.epsilon;
  doc["box"] = {{"lo", vector_to_json(set.box.lo)}, {"hi", vector_to_json(set.box.hi)}};
  doc["ideal"] = vector_to_json(set.ideal);
  json gens = json::array();
  for (const Vector& a : set.generators) gens.push_back(vector_to_json(a));
  doc["generators"] = std::move(gens);
  doc["stats"] = {{"grid_points", set.stats.grid_points},
                  {"evaluations", set.stats.evaluations},
                  {"accepted", set.stats.accepted}};
  return doc;
}

saa::ApproxSet approx_set_from_json(const json& doc) {
  try {
    saa::ApproxSet set;
    set.feasible = doc.value("feasible", true);
    set.epsilon = doc.at("epsilon").get<double>();
    set.box.lo = vector_from_json(doc.at("box").at("lo"));
    set.box.hi = vector_from_json(doc.at("box").at("hi"));
    set.ideal = vector_from_json(doc.at("ideal"));
    for (const json& a : doc.at("generators")) set.generators.push_back(vector_from_json(a));
    if (doc.contains("stats")) {
      set.stats.grid_points = doc["stats"].value("grid_points", 0L);
      set.stats.evaluations = doc["stats"].value("evaluations", 0L);
      set.stats.accepted = doc["stats"].value("accepted", 0L);
    }
    return set;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed approximation JSON: ") + e.what());
  }
}

std::string convergence_to_csv(const saa::ConvergenceTable& table) {
  std::string out = "seed,N,hausdorff_to_ref";
  for (std::size_t p = 0; p < table.probes.size(); ++p) out += ",probe_" + std::to_string(p + 1);
  out += "\n";
  for (const saa::ConvergenceRow& row : table.rows) {
    out += row.median ? std::string("median") : std::to_string(row.seed);
    out += "," + std::to_string(row.sample_size) + "," + format_double(row.hausdorff_to_ref);
    for (double v : row.probes) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

std::string staircase_csv(const saa::ApproxSet& set) {
  if (set.box.hi.size() != 2) throw ValidationError("staircase output needs g = 2");
  std::vector<Vector> gens = set.generators;
  std::sort(gens.begin(), gens.end(), [](const Vector& a, const Vector& b) {
    return a(0) != b(0) ? a(0) < b(0) : a(1) > b(1);
  });
  std::string out = "z1,z2\n";
  auto row = [&](double a, double b) { out += format_double(a) + "," + format_double(b) + "\n"; };
  if (gens.empty()) return out;
  row(gens.front()(0), set.box.hi(1));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) row(gens[k](0), gens[k - 1](1));
    row(gens[k](0), gens[k](1));
  }
  row(set.box.hi(0), gens.back()(1));
  return out;
}

}  // namespace sysvar::io
