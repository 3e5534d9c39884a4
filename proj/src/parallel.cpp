#include "airgnn/parallel.hpp"

#include <omp.h>

#include <algorithm>

namespace airgnn {

namespace {
int g_max_jobs = 0;
}

void set_max_jobs(int jobs) { g_max_jobs = std::max(0, jobs); }

int max_jobs() {
  if (g_max_jobs > 0) return g_max_jobs;
  return omp_get_max_threads();
}

bool inside_parallel_region() { return omp_in_parallel() != 0; }

void serial_for(int64_t n, const std::function<void(int64_t)>& fn) {
  for (int64_t i = 0; i < n; ++i) fn(i);
}

void parallel_for(int64_t n, const std::function<void(int64_t)>& fn) {
  const int jobs = std::min<int64_t>(max_jobs(), n);
  if (jobs <= 1 || inside_parallel_region()) {
    serial_for(n, fn);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (int64_t i = 0; i < n; ++i) {
    fn(i);
  }
}

}  // namespace airgnn
