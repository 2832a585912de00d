#pragma once

#include "gkmod/exact_matrix.hpp"
#include "gkmod/lie_algebra.hpp"
#include "gkmod/polynomial.hpp"
#include "gkmod/variety.hpp"

#include <functional>
#include <vector>

namespace gkmod {

// The derivation induced on polynomials by the linear flow of X:
//   (drho(X) p)(m) = -<grad p, X m>,
// reduced to normal form on quotient rings. Degree-preserving on R^n.
Polynomial apply_drho(const LieElement& x, const Polynomial& p, const Variety& v);

// NF(drho(X) r^2): the multiplier that conjugates the Gaussian factor away.
Polynomial drho_of_r2(const LieElement& x, const Variety& v);

// The action on polynomial parts of p * exp(-r^2):
//   dpi'(X) p = drho(X) p - (drho(X) r^2) * p.
// On R^n this maps homogeneous degree l into degrees {l, l+2} exactly.
Polynomial apply_dpi_prime(const LieElement& x, const Polynomial& p, const Variety& v);

enum class OpTag { dpi_prime, drho };

// Monomial word in the enveloping algebra; factors apply right-to-left.
struct OperatorWord {
    std::vector<std::pair<LieElement, OpTag>> factors;

    static OperatorWord identity() { return {}; }
    static OperatorWord single(LieElement x, OpTag tag) { return {{{std::move(x), tag}}}; }

    // word for "apply x after this word".
    OperatorWord then(const LieElement& x, OpTag tag) const;

    size_t length() const { return factors.size(); }
};

Polynomial apply_word(const OperatorWord& w, const Polynomial& p, const Variety& v);

// Formal Q(i)-combination of words (Casimir elements, witnesses).
struct WordSum {
    std::vector<std::pair<GaussianRational, OperatorWord>> terms;
};

Polynomial apply_word_sum(const WordSum& ws, const Polynomial& p, const Variety& v);

// Left regular substitution rho(g) p = p o g^{-1}, then normal form. On a
// quotient ring g must preserve the ideal; rejected with a diagnostic
// otherwise.
Polynomial rho_substitute(const GroupElement& g, const Polynomial& p, const Variety& v);

// Operator-level restatement of the bracket relations: true iff
//   dpi'([X,Y]) = dpi'(X) dpi'(Y) - dpi'(Y) dpi'(X)
// holds exactly on every normal-form monomial of degree <= D.
bool check_hom_identity(const LieElement& x, const LieElement& y, int max_degree, const Variety& v);

// Exact matrix of a linear polynomial action in the normal-form monomial
// basis of degree <= D (column j = image of the j-th monomial, largest
// first). The action must not leave the degree bound; an image overflow is
// reported with the offending monomial.
ExactMatrix operator_matrix(const std::function<Polynomial(const Polynomial&)>& action,
                            int max_degree, const Variety& v);

// Pointwise residual check of the conjugation identity
//   pi(g) dpi(X) phi = dpi(Ad(g) X) pi(g) phi,   phi = p * exp(-r^2).
// Both sides collapse to (polynomial) * exp(-(g^{-1} m)^2) with the
// polynomials derived symbolically through different routes; returns the
// max |difference| over the sample points.
double ad_equivariance_check(const GroupElement& g, const LieElement& x, const Polynomial& p,
                             const Variety& v, const std::vector<std::vector<double>>& points);

}  // namespace gkmod
