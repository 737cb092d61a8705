#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horizon/geometry.hpp"
#include "horizon/types.hpp"

namespace horizon {

// Complex polynomial in one variable, coefficients in ascending order.
struct Poly {
    std::vector<cx> c;

    cx eval(cx z) const {
        cx v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
        return v;
    }
    cx deriv(cx z) const {
        cx v = 0.0;
        for (i64 i = static_cast<i64>(c.size()) - 1; i >= 1; --i)
            v = v * z + static_cast<double>(i) * c[static_cast<std::size_t>(i)];
        return v;
    }
    int degree() const {
        for (i64 i = static_cast<i64>(c.size()) - 1; i >= 0; --i)
            if (c[static_cast<std::size_t>(i)] != 0.0) return static_cast<int>(i);
        return 0;
    }
};

// Bounded analytic perturbation: a finite sum of monomial terms plus optional
// single-variable exponential terms, per output component. Derivatives are
// exact; the sup norm over a polydisc has a closed-form bound.
struct Perturbation {
    struct Term {
        int component = 0;            // output coordinate the term feeds
        cx coeff;
        std::vector<int> powers;      // monomial exponents per input coordinate
        bool is_exp = false;          // coeff * exp(rate * x[exp_var]) instead
        int exp_var = 0;
        cx rate;
    };
    std::vector<Term> terms;

    cvec eval(const cvec& x) const;
    cmat differential(const cvec& x) const;
    double sup_norm_bound(const std::vector<double>& radii) const;
};

// Holomorphic map with forward/inverse evaluation and exact complex Jacobian.
// Immutable after construction; all evaluation is pure and reentrant.
class MapSpec {
public:
    enum class Kind { henon, decoupled, regular_auto, product, composite, inverse, perturbed, linear };

    // f(z,w) = (p(z) - a w, z) with p absorbing the constant c; a != 0.
    static std::shared_ptr<const MapSpec> henon(Poly p, cx a);
    // f(z,w) = (z^m, gamma w): the decoupled product model, m >= 2, 0 < |gamma| < 1.
    static std::shared_ptr<const MapSpec> decoupled(int m, cx gamma);
    // Regular polynomial automorphism of C^3 with linear indeterminacy sets:
    // H(z1,z2,z3) = (p2(p1(z1) + a1 z2) + a2 z3, z1, p1(z1) + a1 z2),
    // deg p1 = deg p2 = d >= 2, so d+ = d^2, d- = d and d+^p = d-^(k-p).
    static std::shared_ptr<const MapSpec> regular3(Poly p1, Poly p2, cx a1, cx a2);
    // F(x1,x2) = (f1(x1), f2(x2)) with coordinates permuted horizontal-first.
    static std::shared_ptr<const MapSpec> product(std::shared_ptr<const MapSpec> f1,
                                                  std::shared_ptr<const MapSpec> f2);
    // outer after inner
    static std::shared_ptr<const MapSpec> compose(std::shared_ptr<const MapSpec> outer,
                                                  std::shared_ptr<const MapSpec> inner);
    static std::shared_ptr<const MapSpec> iterate(std::shared_ptr<const MapSpec> f, int n);
    static std::shared_ptr<const MapSpec> inverse(std::shared_ptr<const MapSpec> f);
    static std::shared_ptr<const MapSpec> perturbed(std::shared_ptr<const MapSpec> base,
                                                    Perturbation pert, double eps);
    static std::shared_ptr<const MapSpec> linear(cmat l);

    // For a Henon map f, the inverse conjugated by the coordinate swap
    // (z,w) -> (w,z) is again a Henon map; this returns it. Used to build
    // the product f x f^{-1} out of two horizontal-like factors.
    static std::shared_ptr<const MapSpec> henon_inverse_conjugate(const MapSpec& f);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    int p() const { return p_; }
    long d_plus() const { return d_plus_; }
    long d_minus() const { return d_minus_; }
    long main_degree() const { return degree_; }
    double perturbation_eps() const { return eps_; }
    const MapSpec* base() const { return f1_.get(); }
    std::string describe() const;

    cvec eval(const cvec& x) const;
    // Closed-form inverse where available, Newton for perturbed maps.
    // Empty optional = Newton failed to reach residual 1e-10.
    std::optional<cvec> try_inverse(const cvec& y) const;
    cvec eval_inverse(const cvec& y) const;  // throws on failure
    // All preimages (principal order). Size d_minus for the decoupled model,
    // 1 for invertible kinds.
    std::vector<cvec> inverse_branches(const cvec& y) const;
    cmat differential(const cvec& x) const;

    std::vector<cvec> forward_orbit(const cvec& x, int n) const;   // x, f(x), ..., f^n(x)
    std::vector<cvec> backward_orbit(const cvec& x, int n) const;  // x, f^-1(x), ...

private:
    MapSpec() = default;

    Kind kind_{};
    int k_ = 0, p_ = 0;
    long d_plus_ = 1, d_minus_ = 1, degree_ = 1;

    Poly poly_;       // henon
    cx a_{};          // henon
    int mono_ = 2;    // decoupled
    cx gamma_{};      // decoupled
    Poly p1_, p2_;    // regular3
    cx a1_{}, a2_{};  // regular3
    std::shared_ptr<const MapSpec> f1_, f2_;  // product/composite/inverse/perturbed
    Perturbation pert_;   // perturbed
    double eps_ = 0.0;    // perturbed
    cmat lin_, lin_inv_;  // linear

    // product coordinate bookkeeping: position of product coordinate i
    // inside (factor, index) pairs
    std::vector<int> which_factor_, factor_index_;

    cvec split1(const cvec& x) const;
    cvec split2(const cvec& x) const;
    cvec recompose(const cvec& y1, const cvec& y2) const;
};

using MapPtr = std::shared_ptr<const MapSpec>;

}  // namespace horizon
