#pragma once

#include <cstddef>
#include <functional>

namespace burstforge {

// Worker count for parallel sections: BURSTFORGE_THREADS if set (clamped to
// [1, 64]), otherwise the hardware concurrency.
std::size_t worker_count();

// Runs fn(0..n-1) across worker_count() threads with a static partition.
// Each index must write only to its own output slot, which keeps results
// identical for every thread count. Nested calls degrade to serial. The
// first exception thrown by any worker is rethrown after the join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace burstforge
