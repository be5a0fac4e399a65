#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace numsemi::detail {

// requested > 0: that many threads; requested == 0: hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Invokes fn(begin, end) over a partition of [0, n). Runs inline when a
// single chunk suffices; results must not depend on the partitioning.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  int t = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)),
                                n == 0 ? 1 : n);
  if (t <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  std::size_t chunk = (n + static_cast<std::size_t>(t) - 1) /
                      static_cast<std::size_t>(t);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace numsemi::detail
