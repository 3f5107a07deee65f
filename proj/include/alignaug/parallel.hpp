#pragma once

#include <cstddef>
#include <functional>

namespace alignaug {

// Resolves a thread-count request; requested <= 0 means hardware concurrency.
int effective_threads(int requested);

// Invokes fn(i) for every i in [0, n), spread over `threads` workers.
// fn must write only to per-index state, so the result is independent of
// scheduling. The first exception thrown by any worker is rethrown after
// all workers have stopped.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace alignaug
