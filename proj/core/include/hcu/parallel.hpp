#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hcu {

// Largest worker count the runtime will honor; 1 in a serial build.
inline int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Run f(i, tid) for i in [0, n) with tid < workers. The split is static so
// repeated runs see the same partition, but nothing may depend on it: rows
// write disjoint output and never read each other.
template <class F>
inline void parallel_rows(int n, int workers, F&& f) {
#ifdef _OPENMP
    if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(workers)
        for (int i = 0; i < n; ++i) f(i, omp_get_thread_num());
        return;
    }
#endif
    for (int i = 0; i < n; ++i) f(i, 0);
}

}  // namespace hcu
