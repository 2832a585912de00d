#pragma once

#include "gkmod/graded_subspace.hpp"
#include "gkmod/polynomial.hpp"

#include <optional>

namespace gkmod {

// The coordinate ring of the ambient space R^n, or of a hypersurface cut
// out by a single polynomial. The generator's leading monomial must be a
// pure power of one variable (rank that variable highest), which keeps
// division remainders canonical without a Groebner engine.
class Variety {
public:
    static Variety affine(int n);
    static Variety affine(int n, MonomialOrder order);
    static Variety hypersurface(int n, Polynomial ideal_generator, MonomialOrder order);

    int ambient_dim() const { return n_; }
    const MonomialOrder& order() const { return order_; }
    bool has_ideal() const { return gen_.has_value(); }
    const Polynomial& ideal_generator() const;

    // Canonical representative modulo the ideal (identity on R^n).
    Polynomial normal_form(const Polynomial& p) const;

    // Multiplication in the quotient ring: NF(p*q).
    Polynomial ring_mul(const Polynomial& p, const Polynomial& q) const;

    // NF(r^2): the canonical representative of the squared distance function.
    const Polynomial& r2() const { return r2_nf_; }

    // Normal-form monomials of degree <= D (all monomials on R^n), largest
    // first under the order; the coordinate system for truncated operators.
    std::vector<Monomial> nf_monomials_up_to(int max_degree) const;

    GradedSubspace full_truncation(int max_degree) const;

    // When the generator reads c*(m_v)^2 + t(other variables), returns
    // (v, rhs) with m_v^2 = rhs on the variety. Enables surface sampling.
    std::optional<std::pair<int, Polynomial>> solvable_square() const;

private:
    Variety(int n, MonomialOrder order, std::optional<Polynomial> gen);

    int n_;
    MonomialOrder order_;
    std::optional<Polynomial> gen_;
    int lead_var_ = -1;   // variable of the generator's pure-power leading monomial
    int lead_exp_ = 0;
    Polynomial r2_nf_;
};

}  // namespace gkmod
