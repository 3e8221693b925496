#pragma once

#include <cstddef>
#include <functional>

namespace volterra {

/// Worker count: VOLTERRA_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads.
/// The first exception thrown by any call is rethrown on the caller's thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace volterra
