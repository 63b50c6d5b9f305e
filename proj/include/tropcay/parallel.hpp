#pragma once

#include <cstddef>
#include <functional>

namespace tropcay {

// Worker cap from TROPCAY_THREADS (default: hardware concurrency, at least 1).
std::size_t worker_count();

// Runs body(worker, workers) on `workers` threads and joins. Exceptions from
// any worker are rethrown after all have finished.
void run_workers(std::size_t workers, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace tropcay
