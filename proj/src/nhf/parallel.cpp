#include "nhf/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace nhf {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("NHS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

std::size_t block_count(std::size_t n) {
  const std::size_t workers = static_cast<std::size_t>(worker_count());
  return std::max<std::size_t>(1, std::min(n, workers * 4));
}

void parallel_blocks(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t blocks = block_count(n);
  const int workers = worker_count();
  if (workers == 1 || blocks == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t lo = n * b / blocks, hi = n * (b + 1) / blocks;
      fn(lo, hi, b);
    }
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t b = next.fetch_add(1);
          if (b >= blocks) break;
          const std::size_t lo = n * b / blocks, hi = n * (b + 1) / blocks;
          fn(lo, hi, b);
        }
      } catch (...) {
        errs[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  parallel_blocks(n, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace nhf
