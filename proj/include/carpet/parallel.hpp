#pragma once

#include <cstddef>
#include <functional>

namespace carpet {

// Worker count: CARPET_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_count();

// Calls body(i) for i in [0, count) on up to thread_count() threads. The
// first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace carpet
