#pragma once

#include <cstddef>
#include <functional>

namespace silink {

// Worker-thread cap: SILINK_THREADS if set to a positive integer, else the
// hardware concurrency (minimum 1).  Read at call time so tests can flip it.
size_t thread_budget();

// Runs fn(0..n-1) across the thread budget.  Callers must write results
// into index-addressed storage; the schedule is unspecified but the result
// is then identical for every budget.  The first exception thrown by any
// worker is rethrown after all workers finish.
void parallel_for(size_t n, const std::function<void(size_t)> &fn);

} // namespace silink
