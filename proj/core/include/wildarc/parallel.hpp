#pragma once

#include <cstddef>
#include <functional>

namespace wildarc {

/// Worker cap: WILDARC_THREADS if set, else hardware concurrency, at least 1.
std::size_t worker_count();

/// Runs fn(i) for i in [begin,end) on worker_count() threads, static chunking.
/// Callers own determinism: results must be written to per-index slots.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace wildarc
