#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace orca {

// Runs fn(i) for i in [0, n). Work items must be independent; callers get
// determinism by writing into preallocated slots and reducing in index
// order afterwards. threads <= 1 runs inline.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (threads <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int wid = 0; wid < workers; ++wid) {
    pool.emplace_back([&, wid] {
      for (int i = wid; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace orca
