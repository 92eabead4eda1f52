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

#ifndef SYSVAR_ERRORS_HPP_
#define SYSVAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sysvar {

// Bad input: malformed parameters, inconsistent dimensions, broken invariants.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the effective domain of a function (e.g. negative cash flow).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A problem size above what an exhaustive routine supports.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Numerical engine failure (iteration cap, lost feasibility, ...).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the CLI layer when a scalarization or set computation has no
// feasible point. Library routines return infeasibility as a result value.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sysvar

#endif  // SYSVAR_ERRORS_HPP_
