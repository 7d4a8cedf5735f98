#pragma once
#include <cstddef>
#include <functional>

namespace ivm {

// Worker count: INTRINSIC_METRICS_THREADS if set (>= 1), else the hardware
// concurrency.  Read on every call so tests can toggle it via setenv.
int thread_count();

// Runs fn(i) for i in [0, count).  The callable writes into caller-owned,
// index-addressed storage; any aggregation happens afterwards in index order,
// so results do not depend on the scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ivm
