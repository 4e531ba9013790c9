#pragma once

#include <cstddef>
#include <functional>

namespace trajsc {

/// Worker count: TRAJSC_THREADS when set (≥ 1), else hardware concurrency.
int thread_budget();

/// Runs fn(0..count-1) across the thread budget. Results must be written to
/// caller-owned slots indexed by i, which keeps output independent of
/// scheduling. If any invocation throws, the exception with the lowest
/// index is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace trajsc
