#pragma once

#include <cstddef>
#include <functional>

namespace gsqg::cli {

/// Number of worker threads for `--jobs 0`.
int default_jobs();

/// Calls body(i) for i in [0, n) on up to `jobs` threads. Each index is
/// processed once; the first exception is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace gsqg::cli
