#pragma once

#include <functional>

// Replica-parallel helper: jobs 0..n-1 run on a small thread pool; callers
// write results into preallocated per-index slots, so output never depends
// on scheduling. RSHE_THREADS caps the worker count.

namespace rshe {

int worker_count();

void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace rshe
