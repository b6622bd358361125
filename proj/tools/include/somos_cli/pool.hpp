#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace somos::cli {

/// Calls f(i) for i in [0, count) on up to `jobs` threads. f must not throw.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace somos::cli
