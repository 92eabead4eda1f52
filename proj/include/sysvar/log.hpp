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

#ifndef SYSVAR_LOG_HPP_
#define SYSVAR_LOG_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

namespace sysvar::log {

enum class Level { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

void set_level(Level level);
Level level();
bool enabled(Level level);

// Parses "debug", "info", "warn", "error" or "off".
Level parse_level(const std::string& name);

// Writes one JSON object per line to stderr: {"ts":..,"level":..,"event":..,...fields}.
void emit(Level level, std::string_view event, const nlohmann::json& fields = nlohmann::json::object());

}  // namespace sysvar::log

#endif  // SYSVAR_LOG_HPP_
