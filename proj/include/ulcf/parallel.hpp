#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ulcf {

/// Runs body(w) for w in [0, workers) on separate threads (inline for one
/// worker) and rethrows the first exception after all threads join.
template <typename Body>
void parallel_for_workers(int workers, Body&& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// results[i] = fn(i) for i in [0, count), items strided across workers.
/// Output order never depends on scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int workers, Fn&& fn) {
  std::vector<Result> results(count);
  const int w_count = workers < 1 ? 1 : workers;
  parallel_for_workers(w_count, [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < count; i += w_count) {
      results[i] = fn(i);
    }
  });
  return results;
}

}  // namespace ulcf
