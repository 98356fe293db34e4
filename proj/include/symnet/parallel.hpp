// Copyright 2026 The symnet Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace symnet {

// Number of workers to use when the caller passes 0.
inline unsigned default_thread_count() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(state, i) for i in [0, count) on up to `threads` workers, each
// owning one `make_state()` result. Callers write results into per-index
// slots, which keeps outputs independent of the worker count. The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename MakeState, typename Body>
void parallel_for_with(std::size_t count, unsigned threads, MakeState&& make_state, Body&& body) {
  if (threads == 0) threads = default_thread_count();
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        auto state = make_state();
        // Interleaved assignment balances the uneven per-item cost (hubs are
        // far more expensive than leaves in the symmetry sweep).
        for (std::size_t i = w; i < count; i += workers) body(state, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  parallel_for_with(
      count, threads, [] { return 0; }, [&](int&, std::size_t i) { body(i); });
}

}  // namespace symnet
