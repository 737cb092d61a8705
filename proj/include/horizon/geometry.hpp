#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "horizon/rng.hpp"
#include "horizon/types.hpp"

namespace horizon {

enum class Shell { outer, prime, second };  // D, D', D''

const char* shell_name(Shell s);

// One factor of the product domain: a polydisc (per-coordinate radii) or a
// ball in C^dim. Radii are the outer-shell radii; inner shells are obtained
// by uniform scaling.
struct FactorGeom {
    bool is_ball = false;
    std::vector<double> radii;  // size dim for polydisc, size 1 for ball

    int dim() const { return is_ball ? ball_dim : static_cast<int>(radii.size()); }
    int ball_dim = 1;  // used only when is_ball

    static FactorGeom polydisc(std::vector<double> r);
    static FactorGeom ball(int dim, double r);
};

// Product domain D = M x N in C^p x C^(k-p), with the nested safety shells
// D'' < D' < D obtained by scaling the factor radii. Shell gaps default to
// 10% of the outer radius per shell step.
class Domain {
public:
    Domain(int k, int p, FactorGeom m, FactorGeom n,
           double prime_factor = 0.9, double second_factor = 0.8);

    static Domain bidisc(double r_m, double r_n,
                         double prime_factor = 0.9, double second_factor = 0.8);
    static Domain polydisc(int k, int p, double r,
                           double prime_factor = 0.9, double second_factor = 0.8);

    int k() const { return k_; }
    int p() const { return p_; }
    int q() const { return k_ - p_; }  // vertical dimension
    const FactorGeom& m_geom() const { return m_; }
    const FactorGeom& n_geom() const { return n_; }
    double shell_factor(Shell s) const;

    bool contains(Shell s, const cvec& x) const;
    bool contains_m(Shell s, const cvec& x) const;  // first p coordinates
    bool contains_n(Shell s, const cvec& x) const;  // last k-p coordinates

    // Signed distance of the factor projection to the factor boundary,
    // positive inside. For a polydisc this is min_i (r_i - |x_i|).
    double margin_m(Shell s, const cvec& x) const;
    double margin_n(Shell s, const cvec& x) const;

    double max_radius() const;   // largest factor radius of the outer shell
    double min_gap() const;      // smallest radial gap between consecutive shells

    // Quasi-uniform seeded samples. Counters advance by a fixed stride per
    // point, so output is reproducible and order-independent.
    cvec sample_interior(Shell s, const CounterRng& rng, u64 point_index) const;
    // pi_1 on the boundary of M, pi_2 interior to N
    cvec sample_vertical_boundary_point(const CounterRng& rng, u64 point_index) const;

    std::vector<cvec> sample_vertical_boundary(i64 count, u64 seed) const;
    std::vector<cvec> sample_points(Shell s, i64 count, u64 seed) const;

    // counters consumed per sampled point
    static constexpr u64 kPointStride = 64;

private:
    int k_, p_;
    FactorGeom m_, n_;
    double prime_factor_, second_factor_;
};

// Bowen orbit metric: max over time steps of the Euclidean distance
// between corresponding orbit entries.
double orbit_metric_distance(const std::vector<cvec>& a, const std::vector<cvec>& b);

}  // namespace horizon
