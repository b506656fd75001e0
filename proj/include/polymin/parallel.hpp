#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace polymin {

/// Thread count from POLYMIN_THREADS, else hardware concurrency.
unsigned default_threads();

/// Runs fn(chunk, begin, end) over `threads` contiguous chunks of [0, n).
/// Chunk c covers indices before chunk c+1, so per-chunk "first" results
/// can be merged deterministically.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

}  // namespace polymin
