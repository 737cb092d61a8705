#pragma once

#include <cstdint>

#include <omp.h>

namespace horizon::par {

// Worker count used by all parallel kernels. n <= 0 leaves the default.
inline void set_workers(int n) {
    if (n > 0) omp_set_num_threads(n);
}

inline int workers() { return omp_get_max_threads(); }

// OpenMP map over [0,n). The body must only write to slots indexed by i so
// that results are identical at any worker count; reductions over the filled
// buffers are done serially by the caller in index order.
template <class F>
void for_each_index(std::int64_t n, F&& body) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

// Serial reference path. Kept alongside the OpenMP kernels so tests can
// assert bit-identical results and the benchmark can compare throughput.
template <class F>
void for_each_index_serial(std::int64_t n, F&& body) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace horizon::par
