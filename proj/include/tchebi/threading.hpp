#pragma once

#include <cstddef>
#include <functional>

namespace tchebi {

// Effective worker count: requested if > 0, otherwise TCHEBI_THREADS if set,
// otherwise all hardware threads.
int resolve_threads(int requested);

// Runs fn(i) for i in [0, count) on up to `threads` workers over contiguous
// index chunks. Callers must ensure fn(i) writes only i-indexed slots so that
// results are independent of the partition.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

}  // namespace tchebi
