#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tda {

/// Runs body(i) for i in [0, count) on up to `max_workers` threads
/// (0 means hardware_concurrency). Iterations must be independent; each should
/// write only its own output slot. The first exception thrown by any iteration
/// is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t max_workers = 0) {
  const std::size_t cap = max_workers ? max_workers : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(count, cap);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tda
