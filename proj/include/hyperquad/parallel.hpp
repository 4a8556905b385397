#pragma once

#include <cstddef>
#include <functional>

namespace hyperquad {

/// Worker count actually used for `requested` (0 = automatic). The automatic
/// value is the hardware concurrency capped by the HYPERQUAD_THREADS
/// environment variable when that is set to a positive integer.
int resolve_threads(int requested = 0);

/// Runs fn(worker, begin, end) over a contiguous block partition of
/// [0, total). Blocks are disjoint, so workers may write worker-local or
/// block-indexed state without synchronization. With one worker this runs
/// inline on the calling thread.
void parallel_blocks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn);

} // namespace hyperquad
