#pragma once

#include <cstddef>
#include <functional>

namespace foodaccess {

/// Runs fn(0..n-1) on up to `threads` workers pulling indices from a
/// shared counter. Each index must write only its own output slot, which
/// keeps results identical for every thread count. The first exception
/// thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace foodaccess
