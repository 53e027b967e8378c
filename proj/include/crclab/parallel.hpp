// Copyright 2026 The crclab Authors.
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

#ifndef CRCLAB_PARALLEL_HPP
#define CRCLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace crclab {

/// Worker count: CRCLAB_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();
void set_worker_count(unsigned n);

/// Calls body(begin, end, worker) on contiguous chunks of [begin, end).
/// Chunks are assigned by index so results that depend only on the chunk are
/// deterministic; exceptions from workers are rethrown on the caller.
template <class Body>
void parallel_for(std::uint64_t begin, std::uint64_t end, Body&& body) {
  const std::uint64_t total = end > begin ? end - begin : 0;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(total, 1)));
  if (workers <= 1 || total < 1024) {
    body(begin, end, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    pool.emplace_back([&, lo, hi, w] {
      try {
        if (lo < hi) body(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace crclab

#endif  // CRCLAB_PARALLEL_HPP
