#include "horizon/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace horizon {

const char* shell_name(Shell s) {
    switch (s) {
        case Shell::outer: return "D";
        case Shell::prime: return "D'";
        case Shell::second: return "D''";
    }
    return "?";
}

FactorGeom FactorGeom::polydisc(std::vector<double> r) {
    FactorGeom g;
    g.is_ball = false;
    g.radii = std::move(r);
    for (double ri : g.radii)
        if (!(ri > 0.0)) throw std::invalid_argument("polydisc radius must be positive");
    if (g.radii.empty()) throw std::invalid_argument("polydisc needs at least one radius");
    return g;
}

FactorGeom FactorGeom::ball(int dim, double r) {
    if (dim < 1) throw std::invalid_argument("ball dimension must be positive");
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
    FactorGeom g;
    g.is_ball = true;
    g.ball_dim = dim;
    g.radii = {r};
    return g;
}

Domain::Domain(int k, int p, FactorGeom m, FactorGeom n,
               double prime_factor, double second_factor)
    : k_(k), p_(p), m_(std::move(m)), n_(std::move(n)),
      prime_factor_(prime_factor), second_factor_(second_factor) {
    if (k < 2 && !(k == 1 && p == 1))
        throw std::invalid_argument("domain needs k >= 2 (or k = p = 1)");
    if (p < 1 || p > k) throw std::invalid_argument("need 1 <= p <= k");
    if (p < k && m_.dim() + n_.dim() != k)
        throw std::invalid_argument("factor dimensions must sum to k");
    if (p == k && m_.dim() != k)
        throw std::invalid_argument("polynomial-like domain must have dim M = k");
    if (m_.dim() != p) throw std::invalid_argument("dim M must equal p");
    if (!(second_factor > 0.0 && second_factor < prime_factor && prime_factor < 1.0))
        throw std::invalid_argument("shells must nest strictly: 0 < second < prime < 1");
}

Domain Domain::bidisc(double r_m, double r_n, double prime_factor, double second_factor) {
    return Domain(2, 1, FactorGeom::polydisc({r_m}), FactorGeom::polydisc({r_n}),
                  prime_factor, second_factor);
}

Domain Domain::polydisc(int k, int p, double r, double prime_factor, double second_factor) {
    return Domain(k, p,
                  FactorGeom::polydisc(std::vector<double>(p, r)),
                  FactorGeom::polydisc(std::vector<double>(k - p, r)),
                  prime_factor, second_factor);
}

double Domain::shell_factor(Shell s) const {
    switch (s) {
        case Shell::outer: return 1.0;
        case Shell::prime: return prime_factor_;
        case Shell::second: return second_factor_;
    }
    return 1.0;
}

namespace {

double factor_margin(const FactorGeom& g, double scale, const cvec& x, int offset) {
    if (g.is_ball) {
        double n2 = 0.0;
        for (int i = 0; i < g.ball_dim; ++i) n2 += std::norm(x[offset + i]);
        return scale * g.radii[0] - std::sqrt(n2);
    }
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.radii.size(); ++i)
        m = std::min(m, scale * g.radii[i] - std::abs(x[offset + static_cast<int>(i)]));
    return m;
}

}  // namespace

bool Domain::contains(Shell s, const cvec& x) const {
    if (x.size() != k_) throw std::invalid_argument("point dimension mismatch");
    return contains_m(s, x) && (p_ == k_ || contains_n(s, x));
}

bool Domain::contains_m(Shell s, const cvec& x) const { return margin_m(s, x) > 0.0; }
bool Domain::contains_n(Shell s, const cvec& x) const { return margin_n(s, x) > 0.0; }

double Domain::margin_m(Shell s, const cvec& x) const {
    if (x.size() != k_) throw std::invalid_argument("point dimension mismatch");
    return factor_margin(m_, shell_factor(s), x, 0);
}

double Domain::margin_n(Shell s, const cvec& x) const {
    if (p_ == k_) return std::numeric_limits<double>::infinity();
    if (x.size() != k_) throw std::invalid_argument("point dimension mismatch");
    return factor_margin(n_, shell_factor(s), x, p_);
}

double Domain::max_radius() const {
    double r = 0.0;
    for (double ri : m_.radii) r = std::max(r, ri);
    for (double ri : n_.radii) r = std::max(r, ri);
    return r;
}

double Domain::min_gap() const {
    double rmin = std::numeric_limits<double>::infinity();
    for (double ri : m_.radii) rmin = std::min(rmin, ri);
    for (double ri : n_.radii) rmin = std::min(rmin, ri);
    return rmin * std::min(1.0 - prime_factor_, prime_factor_ - second_factor_);
}

namespace {

cvec sample_factor(const FactorGeom& g, double scale, const CounterRng& rng, u64 ctr) {
    if (g.is_ball) return rng.ball(ctr, g.ball_dim, scale * g.radii[0]);
    cvec x(static_cast<i64>(g.radii.size()));
    for (i64 i = 0; i < x.size(); ++i)
        x[i] = rng.disc(ctr + CounterRng::kStride * static_cast<u64>(i), scale * g.radii[i]);
    return x;
}

}  // namespace

cvec Domain::sample_interior(Shell s, const CounterRng& rng, u64 point_index) const {
    const u64 base = point_index * kPointStride;
    cvec x(k_);
    const double f = shell_factor(s);
    x.head(p_) = sample_factor(m_, f, rng, base);
    if (p_ < k_)
        x.tail(k_ - p_) = sample_factor(n_, f, rng, base + kPointStride / 2);
    return x;
}

cvec Domain::sample_vertical_boundary_point(const CounterRng& rng, u64 point_index) const {
    const u64 base = point_index * kPointStride;
    cvec x(k_);
    if (m_.is_ball) {
        // uniform on the sphere: normalized gaussian
        cvec g(p_);
        double n2 = 0.0;
        for (int i = 0; i < p_; ++i) {
            g[i] = rng.gaussian(base + CounterRng::kStride * static_cast<u64>(i));
            n2 += std::norm(g[i]);
        }
        if (n2 == 0.0) { g[0] = 1.0; n2 = 1.0; }
        x.head(p_) = g * (m_.radii[0] / std::sqrt(n2));
    } else {
        // pick a face |z_j| = r_j, other coordinates interior
        const u64 face = rng.raw(base) % static_cast<u64>(p_);
        for (int i = 0; i < p_; ++i) {
            const u64 c = base + CounterRng::kStride * static_cast<u64>(i) + 1;
            x[i] = (static_cast<u64>(i) == face) ? rng.circle(c, m_.radii[i])
                                                 : rng.disc(c, m_.radii[i]);
        }
    }
    if (p_ < k_)
        x.tail(k_ - p_) = sample_factor(n_, 1.0, rng, base + kPointStride / 2);
    return x;
}

std::vector<cvec> Domain::sample_vertical_boundary(i64 count, u64 seed) const {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    CounterRng rng(seed, /*stream=*/0x5bdau);
    std::vector<cvec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (i64 i = 0; i < count; ++i)
        out.push_back(sample_vertical_boundary_point(rng, static_cast<u64>(i)));
    return out;
}

std::vector<cvec> Domain::sample_points(Shell s, i64 count, u64 seed) const {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    CounterRng rng(seed, /*stream=*/0x17e0u);
    std::vector<cvec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (i64 i = 0; i < count; ++i)
        out.push_back(sample_interior(s, rng, static_cast<u64>(i)));
    return out;
}

double orbit_metric_distance(const std::vector<cvec>& a, const std::vector<cvec>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("orbit length mismatch");
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        d = std::max(d, (a[j] - b[j]).norm());
    return d;
}

}  // namespace horizon
