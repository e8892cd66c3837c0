#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace eqlab {

/// Active worker count for data-parallel fills. 0 = hardware concurrency.
/// Set once from the CLI --threads flag before compute starts.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Static block partition of [0, n): fn(begin, end) per worker. Partitioning
/// is a pure function of (n, thread_count) so parallel reductions that
/// combine per-block results in block order stay deterministic.
template <typename Fn>
void parallel_for_blocks(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min(thread_count(), n == 0 ? std::size_t{1} : n);
  if (workers <= 1 || n < 2) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace eqlab
