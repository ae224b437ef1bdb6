// Deterministic index-parallel loops. Each index runs exactly once; callers
// write results into per-index slots so output order never depends on timing.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hardy {

// Requested count (0 = hardware concurrency), capped by HARDY_LAB_THREADS.
inline int thread_count(int requested = 0) {
  int n = requested > 0 ? requested : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("HARDY_LAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) n = std::min(n, cap);
    } catch (const std::exception&) {
    }
  }
  return std::max(1, n);
}

// Calls body(i) for i in [0, n). The exception thrown at the lowest index, if
// any, is rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t n, Body&& body, int threads = 0) {
  const int t = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(thread_count(threads)), n));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hardy
