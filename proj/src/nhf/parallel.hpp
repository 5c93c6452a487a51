#pragma once

#include <cstddef>
#include <functional>

namespace nhf {

// Number of worker threads: min(hardware, NHS_THREADS if set). Always >= 1.
int worker_count();

// Runs fn(i) for i in [0, n) on worker threads in contiguous blocks.
// fn must be safe to call concurrently for distinct i; exceptions propagate.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Block variant: fn(begin, end, block_index) over a fixed block decomposition.
// Block count and boundaries depend only on n and worker_count(), so
// per-block reductions combined in block order are deterministic.
void parallel_blocks(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

std::size_t block_count(std::size_t n);

}  // namespace nhf
