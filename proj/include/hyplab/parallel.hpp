#pragma once

#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hyplab {

// Runs fn(worker_index) on `workers` threads and joins; workers == 1 runs
// inline. Callers own determinism: workers write to private buffers (or
// disjoint slices) and merge in a fixed order, so results never depend on
// the worker count or on scheduling.
inline void run_workers(int workers, const std::function<void(int)>& fn) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (workers == 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) threads.emplace_back(fn, w);
  for (auto& t : threads) t.join();
}

}  // namespace hyplab
