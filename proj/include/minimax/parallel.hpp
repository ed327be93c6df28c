#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace minimax {

/// Worker count from MINIMAX_WORKERS, else the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("MINIMAX_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// out[i] = f(i) for i < n, computed in contiguous chunks; the first exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f, int workers = worker_count()) {
  std::vector<T> out(n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::size_t chunks = std::min<std::size_t>(workers, n);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  for (std::size_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      try {
        for (std::size_t i = c * n / chunks; i < (c + 1) * n / chunks; ++i) out[i] = f(i);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace minimax
