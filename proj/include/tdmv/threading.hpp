#pragma once

#include <functional>

namespace tdmv {

/// Effective worker count: `requested` when >= 1, otherwise the
/// TDMV_THREADS environment variable, otherwise the hardware concurrency.
int thread_count(int requested = 0);

/// Runs fn(0) .. fn(n-1), splitting the index range over `threads` workers.
/// Callers must write results into per-index slots so the outcome is
/// independent of the thread count. Exceptions from workers are rethrown.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace tdmv
