#pragma once

#include "gkmod/gaussian_rational.hpp"
#include "gkmod/monomial.hpp"

#include <complex>
#include <map>
#include <span>
#include <string>

namespace gkmod {

class ExactMatrix;

// Multivariate polynomial over Q(i): finitely supported map from exponent
// vectors to coefficients. Zero coefficients are never stored, so equality
// is term-map equality. When the engine works on a quotient ring, a
// Polynomial always holds the canonical (normal-form) representative; this
// class itself knows nothing about ideals.
class Polynomial {
public:
    explicit Polynomial(int ambient_dim) : n_(ambient_dim) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, GaussianRational c);
    static Polynomial variable(int n, int var);
    static Polynomial monomial(int n, Monomial m, GaussianRational c);

    int ambient_dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; -1 is the degree sentinel of the zero polynomial.
    int degree() const;

    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    GaussianRational coeff(const Monomial& m) const;

    // Accumulates c into the coefficient of m, pruning if the sum vanishes.
    void add_term(const Monomial& m, const GaussianRational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial partial(int var) const;

    // Terms of total degree <= D / the homogeneous layer of degree l.
    Polynomial truncated(int max_degree) const;
    Polynomial homogeneous_part(int l) const;
    bool is_homogeneous() const;

    // p(A m): substitutes m_i -> sum_j A(i,j) m_j.
    Polynomial substitute_linear(const ExactMatrix& a) const;

    GaussianRational evaluate_exact(std::span<const Rational> point) const;
    std::complex<double> evaluate(std::span<const double> point) const;

    // Largest monomial under the given order; polynomial must be nonzero.
    Monomial leading_monomial(const MonomialOrder& order) const;

    std::string to_string() const;

private:
    void check_dim(const Polynomial& o) const;

    int n_;
    std::map<Monomial, GaussianRational> terms_;  // plain lex container order
};

inline Polynomial operator*(const GaussianRational& c, const Polynomial& p) { return p.scaled(c); }

// Sum of squares of all coordinates: the squared distance function.
Polynomial r_squared(int n);

}  // namespace gkmod
