#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcorr {

// Execution policy for the data-parallel kernels (grid scans, sweeps,
// trial batches). Serial is the reference path the tests compare against;
// Parallel runs the same per-index body under OpenMP. Every kernel writes
// each index's result to its own slot, so the two paths are bit-identical.
enum class Exec { Serial, Parallel };

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qcorr
