#pragma once

#include "gkmod/exact_matrix.hpp"
#include "gkmod/polynomial.hpp"

#include <optional>
#include <vector>

namespace gkmod {

// Subspace of the polynomials of total degree <= D, held in reduced-echelon
// canonical form with respect to the global monomial order: basis leading
// monomials are strictly increasing and no leading monomial occurs in
// another basis element. Canonical form makes equality and membership exact.
class GradedSubspace {
public:
    GradedSubspace(int n, int max_degree, MonomialOrder order)
        : n_(n), max_degree_(max_degree), order_(std::move(order)) {}

    // Reduced-echelon span of the given vectors. Throws if a vector
    // exceeds the degree bound.
    static GradedSubspace from_vectors(const std::vector<Polynomial>& vectors, int n,
                                       int max_degree, const MonomialOrder& order);

    // Same, also reporting basis[r] = sum_j combos(r,j) * vectors[j].
    static GradedSubspace from_vectors_with_combos(const std::vector<Polynomial>& vectors, int n,
                                                   int max_degree, const MonomialOrder& order,
                                                   ExactMatrix* combos);

    int ambient_dim() const { return n_; }
    int max_degree() const { return max_degree_; }
    const MonomialOrder& order() const { return order_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Polynomial>& basis() const { return basis_; }

    bool contains(const Polynomial& p) const;
    bool contains(const GradedSubspace& other) const;
    bool equals(const GradedSubspace& other) const;

    // Remainder of p after elimination against the basis; zero iff member.
    Polynomial reduce(const Polynomial& p) const;

    // Coordinates of p in the canonical basis, or nullopt when p is not a
    // member.
    std::optional<std::vector<GaussianRational>> express(const Polynomial& p) const;

    GradedSubspace sum(const GradedSubspace& other) const;
    GradedSubspace intersect(const GradedSubspace& other) const;

    // All monomials of degree <= D, largest first under the order. This is
    // the coordinate system used by every matrix-side computation.
    static std::vector<Monomial> monomials_up_to(int n, int max_degree, const MonomialOrder& order);

    static std::vector<GaussianRational> coords(const Polynomial& p,
                                                const std::vector<Monomial>& monomials);
    static Polynomial from_coords(const std::vector<GaussianRational>& v, int n,
                                  const std::vector<Monomial>& monomials);

private:
    void check_compatible(const GradedSubspace& other) const;

    int n_;
    int max_degree_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;  // leading monomials strictly increasing
};

}  // namespace gkmod
