#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spectough::detail {

// Calls body(i) for i in [0, count) on up to `jobs` threads. Work is handed
// out by an atomic counter; callers write into per-index slots so the merged
// result does not depend on scheduling. The first exception is rethrown.
template <class Body>
void parallel_for(long long count, int jobs, Body&& body) {
  jobs = static_cast<int>(std::clamp<long long>(jobs, 1, std::max<long long>(count, 1)));
  if (jobs == 1) {
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (long long i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace spectough::detail
