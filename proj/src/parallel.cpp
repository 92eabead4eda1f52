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

#include "sysvar/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace sysvar {
namespace {

std::atomic<int> configured{0};

int env_threads() {
  if (const char* env = std::getenv("SYSVAR_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

// Nested regions run serially so cell-level and scenario-level loops compose.
[[maybe_unused]] const bool nested_off = [] {
  omp_set_max_active_levels(1);
  return true;
}();

}  // namespace

int default_thread_count() {
  const int env = env_threads();
  return env > 0 ? env : omp_get_max_threads();
}

void set_thread_count(int threads) { configured.store(threads > 0 ? threads : 0); }

int thread_count() {
  const int env = env_threads();
  if (env > 0) return env;
  const int n = configured.load();
  return n > 0 ? n : omp_get_max_threads();
}

}  // namespace sysvar
