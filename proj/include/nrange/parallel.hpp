#pragma once

#include <cstddef>
#include <functional>

namespace nrange {

/// Runs fn(0..count) across worker threads; thread count is
/// min(hardware_concurrency, NRANGE_THREADS when set). Results must be
/// written to disjoint slots so the output is order-independent.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace nrange
