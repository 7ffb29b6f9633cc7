#pragma once

#include <cstddef>
#include <functional>

namespace ramiflow {

// Worker cap for parallel_for: the RAMIFLOW_THREADS environment variable when
// set (values < 1 read as 1), otherwise the hardware concurrency.
std::size_t worker_cap();

// Runs fn(i) for i in [0, n) on up to worker_cap() threads. Results must be
// written into per-index slots by the caller; the partition of indices over
// threads is deterministic, so output never depends on scheduling. Exceptions
// from workers are captured and rethrown (first index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ramiflow
