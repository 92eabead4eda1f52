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

#include "sysvar/log.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>

#include "sysvar/errors.hpp"

namespace sysvar::log {
namespace {

std::atomic<Level> current{Level::kWarn};
std::mutex sink;

const char* name(Level l) {
  switch (l) {
    case Level::kDebug:
      return "debug";
    case Level::kInfo:
      return "info";
    case Level::kWarn:
      return "warn";
    case Level::kError:
      return "error";
    case Level::kOff:
      break;
  }
  return "off";
}

}  // namespace

void set_level(Level l) { current.store(l); }
Level level() { return current.load(); }
bool enabled(Level l) { return l != Level::kOff && l >= current.load(); }

Level parse_level(const std::string& text) {
  for (Level l : {Level::kDebug, Level::kInfo, Level::kWarn, Level::kError, Level::kOff}) {
    if (text == name(l)) return l;
  }
  throw ValidationError("unknown log level '" + text + "'");
}

void emit(Level l, std::string_view event, const nlohmann::json& fields) {
  if (!enabled(l)) return;
  nlohmann::json line;
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  line["ts"] = std::chrono::duration<double>(now).count();
  line["level"] = name(l);
  line["event"] = event;
  if (fields.is_object()) {
    for (const auto& [k, v] : fields.items()) line[k] = v;
  }
  const std::string text = line.dump() + "\n";
  std::lock_guard<std::mutex> lock(sink);
  std::fputs(text.c_str(), stderr);
}

}  // namespace sysvar::log
