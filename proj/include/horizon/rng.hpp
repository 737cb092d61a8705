#pragma once

#include <cmath>
#include <cstdint>

#include "horizon/types.hpp"

namespace horizon {

// Counter-based pseudorandom generator built on the splitmix64 finalizer:
// draw i of stream s under seed q is mix(base(q,s) + (i+1)*GAMMA), i.e. the
// splitmix64 sequence started at a stream-dependent state. Every draw is
// addressed by an explicit 64-bit counter, so parallel consumers indexed by
// sample id reproduce the exact same values at any worker count.
class CounterRng {
public:
    explicit CounterRng(u64 seed, u64 stream = 0)
        : base_(mix(seed ^ mix(stream + 0x1F123BB5159A55E5ULL))) {}

    // uniform in [0,1), 53-bit mantissa
    double u01(u64 counter) const {
        return static_cast<double>(raw(counter) >> 11) * 0x1.0p-53;
    }

    u64 raw(u64 counter) const { return mix(base_ + (counter + 1) * GAMMA); }

    // uniform on [a,b)
    double uniform(u64 counter, double a, double b) const {
        return a + (b - a) * u01(counter);
    }

    // uniform (area measure) on the closed disc of radius r; consumes 2 counters
    cx disc(u64 counter, double r) const {
        const double rho = r * std::sqrt(u01(counter));
        const double th = 2.0 * M_PI * u01(counter + 1);
        return cx(rho * std::cos(th), rho * std::sin(th));
    }

    // uniform on the circle |z| = r; consumes 1 counter
    cx circle(u64 counter, double r) const {
        const double th = 2.0 * M_PI * u01(counter);
        return cx(r * std::cos(th), r * std::sin(th));
    }

    // standard complex gaussian (two Box-Muller normals); consumes 2 counters
    cx gaussian(u64 counter) const {
        double u1 = u01(counter);
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = u01(counter + 1);
        const double m = std::sqrt(-2.0 * std::log(u1));
        return cx(m * std::cos(2.0 * M_PI * u2), m * std::sin(2.0 * M_PI * u2));
    }

    // draws per coordinate used by the vector helpers below
    static constexpr u64 kStride = 4;

    // uniform on the polydisc with per-coordinate radii; consumes dim*kStride counters
    template <class Radii>
    cvec polydisc(u64 counter, const Radii& radii) const {
        cvec x(static_cast<i64>(radii.size()));
        for (i64 i = 0; i < x.size(); ++i)
            x[i] = disc(counter + kStride * static_cast<u64>(i), radii[i]);
        return x;
    }

    // uniform on the ball of radius r in C^dim; consumes dim*kStride+2 counters
    cvec ball(u64 counter, int dim, double r) const {
        cvec g(dim);
        double n2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            g[i] = gaussian(counter + kStride * static_cast<u64>(i));
            n2 += std::norm(g[i]);
        }
        if (n2 == 0.0) return cvec::Zero(dim);
        const double u = u01(counter + kStride * static_cast<u64>(dim));
        const double scale = r * std::pow(u, 1.0 / (2.0 * dim)) / std::sqrt(n2);
        return g * scale;
    }

private:
    static constexpr u64 GAMMA = 0x9E3779B97F4A7C15ULL;

    static u64 mix(u64 x) {
        x += GAMMA;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    u64 base_;
};

}  // namespace horizon
