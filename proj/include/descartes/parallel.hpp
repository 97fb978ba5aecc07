#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace descartes {

/// Worker cap: DESCARTES_LAB_THREADS when set (>=1), else the hardware
/// concurrency.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("DESCARTES_LAB_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs f(i) for i in [0, n); results must be written into preallocated
/// slots so the output order never depends on scheduling.
template <typename F>
void parallel_for(size_t n, F&& f) {
  unsigned workers = thread_cap();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace descartes
