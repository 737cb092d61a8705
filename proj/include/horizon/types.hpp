#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace horizon {

using cx = std::complex<double>;
using cvec = Eigen::VectorXcd;  // point of C^k
using cmat = Eigen::MatrixXcd;  // k x k holomorphic differential
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool finite(const cx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool finite(const cvec& v) {
    for (i64 i = 0; i < v.size(); ++i)
        if (!finite(v[i])) return false;
    return true;
}

// max(log, 0), the escape-rate normalization of logarithms
inline double log_plus(double t) { return t > 1.0 ? std::log(t) : 0.0; }

}  // namespace horizon
