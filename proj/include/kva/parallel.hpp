#pragma once

#include <cstddef>
#include <functional>

namespace kva {

// Worker count: KV_ATELIER_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_cap();

// Runs fn(i) for i in [0, n) across up to thread_cap() threads. Callers are
// responsible for writing to disjoint slots; exceptions are rethrown on the
// calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kva
