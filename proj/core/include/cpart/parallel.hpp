#pragma once

#include <cstddef>
#include <functional>

namespace cpart {

// Worker count: CIRCLE_PARTITIONS_THREADS if set, else hardware concurrency.
unsigned worker_count();

// Static block partition of [0, n); each block runs on its own thread and
// writes only to its own index range, so assembly is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cpart
