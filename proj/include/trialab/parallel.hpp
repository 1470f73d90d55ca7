#pragma once

#include <cstddef>
#include <functional>

namespace trialab {

/// Worker count for tuple-space checks: hardware concurrency capped by the
/// TRIALAB_THREADS environment variable (positive integer).
int worker_count();

/// Splits [0, total) into at most worker_count() contiguous chunks and runs
/// fn(chunk_index, begin, end) on each, in parallel. Chunk boundaries depend
/// only on total and the worker count, never on scheduling.
void parallel_chunks(std::size_t total,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Number of chunks parallel_chunks will use for the given total.
std::size_t chunk_count(std::size_t total);

}  // namespace trialab
