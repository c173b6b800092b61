#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace abelcut {

/// Worker count from ABELCUT_THREADS, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("ABELCUT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(i) for i in [0, count) over a small pool. Results must be written
/// to per-index slots so the caller can reduce them in index order. The
/// exception from the lowest failing index is rethrown.
inline void parallel_for(int64_t count, const std::function<void(int64_t)>& body) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<int64_t>(count, 1)));
  if (workers <= 1) {
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int64_t i = w; i < count; i += workers) {
        try {
          body(i);
        } catch (...) {
          errors[static_cast<size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace abelcut
