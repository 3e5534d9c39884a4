#pragma once

#include <cstdint>
#include <functional>

namespace airgnn {

// Global worker cap, set once from the CLI --jobs flag (0 = hardware default).
void set_max_jobs(int jobs);
int max_jobs();

// Runs fn(i) for i in [0, n). Parallel across indices when jobs > 1 and the
// caller is not already inside a parallel region; plain serial loop otherwise.
// The serial path is the reference implementation used by the tests.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);
void serial_for(int64_t n, const std::function<void(int64_t)>& fn);

bool inside_parallel_region();

}  // namespace airgnn
