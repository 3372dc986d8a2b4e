#ifndef PEQ_PARALLEL_HPP
#define PEQ_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace peq {

/// OpenMP-backed loop over [0, n). Falls back to a serial loop when OpenMP
/// is unavailable. Static schedule, so results that depend on per-thread
/// accumulation order are reproducible for a fixed thread count.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
#else
    for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

/// Max-reduction over [0, n); order-independent, safe under any schedule.
template <class F>
double parallel_max(std::int64_t n, F&& value_of) {
    double m = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::int64_t i = 0; i < n; ++i) {
        double v = value_of(i);
        if (v > m) m = v;
    }
#else
    for (std::int64_t i = 0; i < n; ++i) {
        double v = value_of(i);
        if (v > m) m = v;
    }
#endif
    return m;
}

inline int num_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_num_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace peq

#endif
