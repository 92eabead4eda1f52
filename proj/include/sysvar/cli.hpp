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

#ifndef SYSVAR_CLI_HPP_
#define SYSVAR_CLI_HPP_

namespace sysvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitCapacity = 4;

// Entry point of the sysvar command-line tool; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace sysvar::cli

#endif  // SYSVAR_CLI_HPP_
