// Copyright 2026 The multinbr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace multinbr::detail {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write
// results into per-index slots, so the outcome does not depend on jobs.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& fn) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; !failed && (i = next++) < count;) {
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace multinbr::detail
