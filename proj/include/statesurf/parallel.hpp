#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace statesurf {

// Runs fn(block) for block = 0..block_count-1 on the given number of worker
// threads and collects results indexed by block.  The block decomposition is
// fixed by the caller, so combining results in block order yields output
// that is independent of the thread count.
template <typename Result, typename Fn>
std::vector<Result> run_blocks(int block_count, int threads, Fn fn) {
  std::vector<Result> results(block_count);
  if (threads <= 1 || block_count <= 1) {
    for (int b = 0; b < block_count; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int b = next.fetch_add(1);
      if (b >= block_count) return;
      results[b] = fn(b);
    }
  };
  std::vector<std::thread> pool;
  int n = std::min(threads, block_count);
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

inline int default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace statesurf
