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

#ifndef SYSVAR_PARALLEL_HPP_
#define SYSVAR_PARALLEL_HPP_

#include <exception>
#include <mutex>

namespace sysvar {

// Worker count used by the OpenMP kernels. SYSVAR_THREADS, when set, wins over
// the configured value; 0 restores the OpenMP default.
void set_thread_count(int threads);
int thread_count();
int default_thread_count();

// Carries the first exception out of a parallel region.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace sysvar

#endif  // SYSVAR_PARALLEL_HPP_
