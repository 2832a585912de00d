#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmod/isotypic.hpp"
#include "gkmod/module_lab.hpp"
#include "test_support.hpp"

#include <array>

using namespace gkmod;
using test::GR;
using test::P;

namespace {

const Variety kPlane = Variety::affine(2);

struct Fixture {
    LieAlgebra lie = sl2_standard();
};

}  // namespace

TEST_CASE("isotypic projection of basic polynomials") {
    Fixture f;
    Polynomial qp = P("m1+i*m2", 2), qm = P("m1-i*m2", 2), r2 = P("m1^2+m2^2", 2);

    CHECK(isotypic_project(1, qp, f.lie, kPlane, 2) == qp);
    CHECK(isotypic_project(0, qp, f.lie, kPlane, 2).is_zero());
    CHECK(isotypic_project(0, r2, f.lie, kPlane, 2) == r2);
    // m1^2 = (q+ + q-)^2 / 4 picks up q+^2/4 in the index-2 slot.
    CHECK(isotypic_project(2, P("m1^2", 2), f.lie, kPlane, 2) == qp.pow(2).scaled(GR("1/4")));
    CHECK(isotypic_project(-1, qm, f.lie, kPlane, 2) == qm);
}

TEST_CASE("isotypic components sum back to the input") {
    Fixture f;
    test::PolyRng rng(211);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = rng.poly(2, 4);
        auto comps = isotypic_components(p, f.lie, kPlane);
        Polynomial sum(2);
        for (const auto& [idx, piece] : comps) {
            sum += piece;
            // Each component is an exact eigenvector of the generator.
            CHECK(apply_drho(f.lie.k_generator(), piece, kPlane) ==
                  piece.scaled(GaussianRational(Rational(0), Rational(idx))));
        }
        CHECK(sum == p);
    }
}

TEST_CASE("isotypic decomposition of the degree-1 truncation") {
    Fixture f;
    GradedSubspace s = kPlane.full_truncation(1);
    auto parts = isotypic_decompose(s, f.lie, kPlane);
    REQUIRE(parts.size() == 3);
    CHECK(parts.at(-1).dim() == 1);
    CHECK(parts.at(0).dim() == 1);
    CHECK(parts.at(1).dim() == 1);
    CHECK(parts.at(1).contains(P("m1+i*m2", 2)));

    GradedSubspace zero(2, 1, kPlane.order());
    CHECK(isotypic_decompose(zero, f.lie, kPlane).empty());

    // Dimensions always fill the decomposed space.
    for (int d = 0; d <= 5; ++d) {
        GradedSubspace full = kPlane.full_truncation(d);
        int total = 0;
        for (const auto& [idx, part] : isotypic_decompose(full, f.lie, kPlane)) total += part.dim();
        CHECK(total == full.dim());
    }

    // Non-invariant subspaces are rejected.
    GradedSubspace skew = GradedSubspace::from_vectors({P("m1", 2)}, 2, 1, kPlane.order());
    CHECK_THROWS(isotypic_decompose(skew, f.lie, kPlane));
}

TEST_CASE("isotypic machinery needs a torus with invariant r^2") {
    LieAlgebra no_k(2, sl2_standard().basis());
    CHECK_THROWS(isotypic_components(P("m1", 2), no_k, kPlane));
    // a3 scales coordinates, so r^2 is not invariant under it.
    LieAlgebra bad_k(2, sl2_standard().basis(), preset_named_element("sl2_standard", "a3"));
    CHECK_THROWS(isotypic_components(P("m1", 2), bad_k, kPlane));
}

TEST_CASE("weight spaces as joint kernels") {
    Fixture f;
    for (int k = 1; k <= 4; ++k) {
        GradedSubspace w =
            weight_space({GaussianRational(Rational(0), Rational(k))}, f.lie, kPlane, 4);
        if (k <= 4) CHECK(w.contains(P("m1+i*m2", 2).pow(k)));
    }
    GradedSubspace w0 = weight_space({GR("0")}, f.lie, kPlane, 4);
    CHECK(w0.contains(P("1", 2)));
    CHECK(w0.contains(P("m1^2+m2^2", 2)));
    CHECK_FALSE(w0.contains(P("m1", 2)));

    CHECK_THROWS(weight_space({}, f.lie, kPlane, 4));
    LieAlgebra no_cartan(2, sl2_standard().basis(), preset_named_element("sl2_standard", "H"));
    CHECK_THROWS(weight_space({GR("0")}, no_cartan, kPlane, 4));
}

TEST_CASE("weight_of recognizes exact weight vectors") {
    Fixture f;
    auto w = weight_of(P("(m1+i*m2)^3", 2), f.lie, kPlane);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == GR("3*i"));
    CHECK_FALSE(weight_of(P("m1", 2), f.lie, kPlane).has_value());
}

TEST_CASE("projector identities on the truncation") {
    Fixture f;
    std::vector<int> all;
    for (int n = -3; n <= 3; ++n) all.push_back(n);
    CHECK(projector_identities_check(all, 3, f.lie, kPlane));

    // Omitting an occurring index breaks completeness.
    std::vector<int> missing;
    for (int n = -3; n <= 2; ++n) missing.push_back(n);
    CHECK_FALSE(projector_identities_check(missing, 3, f.lie, kPlane));

    // Extra indices with empty eigenspaces are harmless.
    std::vector<int> extra = all;
    extra.push_back(9);
    CHECK(projector_identities_check(extra, 3, f.lie, kPlane));
}

TEST_CASE("projector identities on the adjoint preset and its quadric") {
    LieAlgebra adj = sl2_adjoint();
    Variety space = Variety::affine(3);
    std::vector<int> indices;
    for (int n = -8; n <= 8; ++n) indices.push_back(n);
    CHECK(projector_identities_check(indices, 4, adj, space));

    Variety quad = test::nxi_variety(1);
    CHECK(projector_identities_check(indices, 4, adj, quad));
    auto dims = isotypic_dimensions(adj, quad, 4);
    int total = 0;
    for (const auto& [idx, d] : dims) {
        total += d;
        CHECK(idx % 2 == 0);  // the doubled angle only produces even characters
    }
    CHECK(total == quad.full_truncation(4).dim());
}

TEST_CASE("K-orbit span equals the span of isotypic components") {
    Fixture f;
    test::PolyRng rng(223);
    // Exact orbit oracle: rho(k) p = sum_n (c + i s)^n p_n for any rational
    // point (c, s) of the circle.
    std::vector<std::array<long, 3>> triples = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = rng.poly(2, 3);
        auto comps = isotypic_components(p, f.lie, kPlane);

        std::vector<Polynomial> orbit = {p};
        for (const auto& triple : triples) {
            Rational c = make_rational(triple[0], triple[2]);
            Rational s = make_rational(triple[1], triple[2]);
            GroupElement rot = preset_torus_element("sl2_standard", c, s);
            Polynomial rotated = rho_substitute(rot, p, kPlane);
            orbit.push_back(rotated);

            // Oracle: the rotated polynomial equals the character-weighted
            // sum of components, exactly.
            GaussianRational unit(c, s);
            Polynomial expect(2);
            for (const auto& [idx, piece] : comps) {
                GaussianRational factor = GaussianRational::one();
                GaussianRational base = idx >= 0 ? unit : unit.conj();
                for (int j = 0; j < std::abs(idx); ++j) factor *= base;
                expect += piece.scaled(factor);
            }
            CHECK(rotated == expect);
        }
        int d = std::max(p.degree(), 0);
        GradedSubspace orbit_span = GradedSubspace::from_vectors(orbit, 2, d, kPlane.order());
        std::vector<Polynomial> comp_vecs;
        for (const auto& [idx, piece] : comps) comp_vecs.push_back(piece);
        GradedSubspace comp_span = GradedSubspace::from_vectors(comp_vecs, 2, d, kPlane.order());
        CHECK(comp_span.contains(orbit_span));
    }
}
