#pragma once

#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbfock {

// Worker count: --threads flag wins, else HILBFOCK_THREADS, else OpenMP default.
inline int& thread_override() {
  static int n = 0;
  return n;
}

inline int worker_count() {
  if (thread_override() > 0) return thread_override();
  if (const char* env = std::getenv("HILBFOCK_THREADS")) {
    int n = atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-slotted parallel loop: results assembled by index, so the output is
// identical to the serial reference regardless of the schedule.
template <class Fn>
void parallel_for_index(int n, Fn&& fn) {
  int workers = worker_count();
#ifdef _OPENMP
  if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  (void)workers;
  for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace hilbfock
