#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace proxsmooth {

/// Worker cap from PROXSMOOTH_THREADS (unset or 0 = hardware concurrency).
std::size_t thread_count();

/// Runs body(lo, hi) over disjoint chunks of [0, n). Chunks write disjoint
/// outputs, so results do not depend on the thread count.
template <class Body>
void parallel_for(std::size_t n, std::size_t min_chunk, Body&& body) {
  const std::size_t workers = std::min(thread_count(), min_chunk == 0 ? n : n / min_chunk);
  if (workers <= 1) {
    if (n > 0) body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        body(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace proxsmooth
