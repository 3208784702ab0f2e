#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qfex {

/// Worker count used by parallel_for. Reads the QFEX_THREADS environment
/// variable when set (>= 1), otherwise the hardware concurrency.
std::size_t worker_count();

/// Runs fn(i) for i in [begin, end) across worker_count() threads. Each index
/// is visited exactly once; callers keep determinism by writing to
/// preallocated per-index slots. Exceptions from fn are rethrown on the
/// calling thread.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace qfex
