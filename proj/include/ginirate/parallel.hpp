// Copyright 2026 The ginirate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GINIRATE_PARALLEL_HPP
#define GINIRATE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ginirate {

/// Number of workers used when the caller passes workers <= 0.
inline int default_workers() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, count) on an OpenMP team of `workers` threads
/// (default_workers() when workers <= 0). The first exception thrown by any
/// iteration is rethrown on the calling thread once the loop has drained.
/// body must not rely on iteration order.
template <typename Body>
void parallel_for(std::int64_t count, int workers, Body&& body) {
  if (workers <= 0) workers = default_workers();
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::once_flag once;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < count; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(i);
    } catch (...) {
      std::call_once(once, [&] { failure = std::current_exception(); });
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ginirate

#endif  // GINIRATE_PARALLEL_HPP
