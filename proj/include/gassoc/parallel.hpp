#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gassoc {

/// Runs fn(k) for k in [0, n) on up to `jobs` threads. Callers write results
/// into preallocated slots, so output order never depends on scheduling.
/// The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::mutex mu;
  std::exception_ptr error;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t k;
      {
        std::lock_guard lock(mu);
        if (next >= n || error) return;
        k = next++;
      }
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gassoc
