#pragma once

#include <functional>

namespace romsched {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Callers write
// results into preallocated per-index slots and reduce serially afterwards,
// so outcomes do not depend on the worker count or interleaving.
void parallel_for_indexed(long long count, int threads,
                          const std::function<void(long long)>& fn);

}  // namespace romsched
