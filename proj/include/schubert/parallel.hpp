#pragma once

#include <cstddef>
#include <functional>

namespace schubert {

/// Worker count for data-parallel scans: SCHUBERT_THREADS if set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads.
/// Callers collect per-index results and merge afterwards; nothing here
/// orders side effects.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace schubert
