#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace keymesh {

/// Worker count: KEYMESH_THREADS if set (clamped to >= 1), else the
/// machine's parallelism.
inline unsigned worker_count() {
  if (const char* env = std::getenv("KEYMESH_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(trial_index) for every index in [0, count) across the worker
/// pool and returns results ordered by index. Each trial derives its own
/// randomness from its index, and aggregation happens on the ordered
/// vector, so outputs are identical for any worker count.
template <class T, class Fn>
std::vector<T> run_trials(std::uint64_t count, Fn&& fn) {
  std::vector<T> results(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const auto i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count || failed.load(std::memory_order_relaxed)) break;
        try {
          results[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) first_error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace keymesh
