#pragma once

#include <cstddef>
#include <functional>

namespace scalekit {

// Runs body(i) for i in [begin, end) across a small thread pool. Each index
// is processed exactly once and must write only to its own output slot, so
// results are identical to the serial order. Falls back to a plain loop for
// short ranges or single-core machines.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body,
                  std::size_t min_grain = 1);

}  // namespace scalekit
