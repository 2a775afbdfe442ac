#pragma once

#include <cstddef>
#include <functional>

namespace crossvol {

/// Worker count for internal parallel loops. Reads CROSSVOL_THREADS; falls
/// back to the hardware concurrency. Always at least 1.
std::size_t thread_count();

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(chunk_index, begin, end) for each. Returns the number of chunks.
/// Chunk k always covers indices below chunk k+1, so callers can merge
/// per-chunk results in order to reproduce a serial scan.
std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                            std::size_t max_chunks = 0);

}  // namespace crossvol
