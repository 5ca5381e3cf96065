#pragma once

#include <cstddef>
#include <functional>

namespace mbfix {

/// Worker count used by the data-parallel loops. Defaults to $MBF_THREADS,
/// else 1.
int thread_count();
void set_thread_count(int threads);

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(worker, begin, end). The partition depends only on count and the
/// worker count, and callers reduce per-worker results in worker order, so
/// results never depend on scheduling.
void parallel_chunks(std::size_t count,
                     const std::function<void(int worker, std::size_t begin, std::size_t end)>& body);

/// Number of chunks parallel_chunks will use for `count` items.
int chunk_count(std::size_t count);

}  // namespace mbfix
