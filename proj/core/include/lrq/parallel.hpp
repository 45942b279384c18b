#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace lrq {

/// Worker count used when a caller passes 0: LRQ_THREADS if set and valid,
/// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default).
/// Each index is executed exactly once; callers write results into per-index
/// slots, so the outcome never depends on scheduling. The first exception
/// thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

/// SplitMix64 mixing of (master seed, stream index) into a child seed.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace lrq
