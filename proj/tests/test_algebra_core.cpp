#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmod/graded_subspace.hpp"
#include "gkmod/rep_ops.hpp"
#include "test_support.hpp"

using namespace gkmod;
using test::GR;
using test::P;

TEST_CASE("gaussian rationals form an exact field") {
    test::PolyRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianRational a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == GaussianRational::one());
            CHECK((b / a) * a == b);
        }
    }
    CHECK(GR("i") * GR("i") == GR("-1"));
    CHECK(GR("1/2+1/3*i") + GR("1/2-1/3*i") == GR("1"));
}

TEST_CASE("rational literals stay in lowest terms") {
    Rational q = rational_from_string("6/-4");
    CHECK(rational_to_string(q) == "-3/2");
    CHECK(q.get_den() == 2);
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("3.5"));
}

TEST_CASE("polynomial arithmetic: frozen products and identities") {
    // q+ * q- expands to m1^2 + m2^2, the square distance in the plane.
    CHECK(P("(m1+i*m2)*(m1-i*m2)", 2) == P("m1^2+m2^2", 2));

    Polynomial p = P("3*m1^2-1/2*m2+i", 2);
    CHECK(p + Polynomial::zero(2) == p);
    CHECK(p.scaled(GaussianRational::zero()).is_zero());
    CHECK((p - p).is_zero());
    CHECK(P("(m1+m2)^3", 2) == P("m1^3+3*m1^2*m2+3*m1*m2^2+m2^3", 2));
}

TEST_CASE("polynomial ring axioms on random instances") {
    test::PolyRng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = rng.poly(2, 3), b = rng.poly(2, 3), c = rng.poly(2, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("degree bookkeeping and truncation") {
    CHECK(Polynomial::zero(2).degree() == -1);
    CHECK(P("1", 2).degree() == 0);
    CHECK(P("m1*m2^3+m1", 2).degree() == 4);
    CHECK(P("m1*m2^3+m1", 2).truncated(2) == P("m1", 2));
    CHECK(P("m1^2+m1*m2+m2", 2).homogeneous_part(2) == P("m1^2+m1*m2", 2));
    CHECK(P("m1^2+m2^2", 2).is_homogeneous());
    CHECK_FALSE(P("m1^2+m2", 2).is_homogeneous());
}

TEST_CASE("graded lex order with variable ranking") {
    MonomialOrder std2 = MonomialOrder::standard(2);
    CHECK(std2.less(Monomial{1, 0}, Monomial{2, 0}));   // degree first
    CHECK(std2.less(Monomial{0, 2}, Monomial{2, 0}));   // then lex, m1 highest
    MonomialOrder ranked = MonomialOrder::ranked({1, 0});
    CHECK(ranked.less(Monomial{2, 0}, Monomial{0, 2}));  // m2 ranked highest
    CHECK_THROWS(MonomialOrder::ranked({0, 0}));
}

TEST_CASE("subspace_from: rank and canonical form") {
    MonomialOrder order = MonomialOrder::standard(2);
    std::vector<Polynomial> dependent = {P("m1", 2), P("m2", 2), P("m1+m2", 2)};
    GradedSubspace s = GradedSubspace::from_vectors(dependent, 2, 1, order);
    CHECK(s.dim() == 2);

    CHECK(GradedSubspace::from_vectors({}, 2, 1, order).dim() == 0);

    std::vector<Polynomial> quads = {P("(m1+i*m2)^2", 2), P("(m1-i*m2)^2", 2), P("m1^2+m2^2", 2)};
    CHECK(GradedSubspace::from_vectors(quads, 2, 2, order).dim() == 3);

    CHECK_THROWS(GradedSubspace::from_vectors({P("m1^2", 2)}, 2, 1, order));
}

TEST_CASE("canonical form is independent of the generating set") {
    test::PolyRng rng(37);
    MonomialOrder order = MonomialOrder::standard(2);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(rng.poly(2, 3));
        GradedSubspace s1 = GradedSubspace::from_vectors(gens, 2, 3, order);
        // A different generating set of the same span: sums and scalings.
        std::vector<Polynomial> gens2 = {gens[0] + gens[1], gens[1],
                                         gens[2].scaled(GR("2/3")) + gens[0]};
        GradedSubspace s2 = GradedSubspace::from_vectors(gens2, 2, 3, order);
        CHECK(s1.equals(s2));
        for (const auto& b : s1.basis()) CHECK(s2.contains(b));
    }
}

TEST_CASE("subspace sum, intersection, and the dimension identity") {
    MonomialOrder order = MonomialOrder::standard(2);
    GradedSubspace a = GradedSubspace::from_vectors({P("m1", 2)}, 2, 1, order);
    GradedSubspace b = GradedSubspace::from_vectors({P("m2", 2)}, 2, 1, order);
    CHECK(a.intersect(b).dim() == 0);
    GradedSubspace c = GradedSubspace::from_vectors({P("m1+m2", 2)}, 2, 1, order);
    CHECK(a.sum(c).dim() == 2);

    test::PolyRng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> ga, gb;
        for (int k = 0; k < 2; ++k) ga.push_back(rng.poly(2, 2, 3));
        for (int k = 0; k < 2; ++k) gb.push_back(rng.poly(2, 2, 3));
        GradedSubspace sa = GradedSubspace::from_vectors(ga, 2, 2, order);
        GradedSubspace sb = GradedSubspace::from_vectors(gb, 2, 2, order);
        CHECK(sa.dim() + sb.dim() == sa.sum(sb).dim() + sa.intersect(sb).dim());
    }
}

TEST_CASE("mismatched truncation parameters are rejected") {
    MonomialOrder order = MonomialOrder::standard(2);
    GradedSubspace a(2, 2, order), b(2, 3, order);
    CHECK_THROWS(a.sum(b));
    CHECK_THROWS(a.intersect(b));
    CHECK_THROWS(a.equals(b));
}

TEST_CASE("operator_matrix in the monomial basis") {
    Variety v = Variety::affine(2);
    ExactMatrix ident = operator_matrix([](const Polynomial& p) { return p; }, 2, v);
    CHECK(ident == ExactMatrix::identity(6));

    ExactMatrix zero =
        operator_matrix([](const Polynomial& p) { return Polynomial::zero(2); }, 2, v);
    CHECK(zero.is_zero());

    // The rotation generator acts on {1, q+, q-} with eigenvalues {0, i, -i}.
    LieElement h = preset_named_element("sl2_standard", "H");
    ExactMatrix m = operator_matrix(
        [&](const Polynomial& p) { return apply_drho(h, p, v); }, 1, v);
    auto monos = v.nf_monomials_up_to(1);
    auto check_eigen = [&](const Polynomial& p, const GaussianRational& ev) {
        auto coords = GradedSubspace::coords(p, monos);
        auto image = m.apply(coords);
        for (size_t k = 0; k < coords.size(); ++k) CHECK(image[k] == coords[k] * ev);
    };
    check_eigen(P("1", 2), GR("0"));
    check_eigen(P("m1+i*m2", 2), GR("i"));
    check_eigen(P("m1-i*m2", 2), GR("-i"));

    // Degree overflow reports the offending monomial.
    Polynomial r2 = r_squared(2);
    CHECK_THROWS_WITH_AS(
        operator_matrix([&](const Polynomial& p) { return p * r2; }, 2, v),
        doctest::Contains("degree bound"), std::domain_error);
}

TEST_CASE("exact linear algebra: rref, kernel, inverse, determinant") {
    test::PolyRng rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        ExactMatrix m(4, 6);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 6; ++c) m.at(r, c) = rng.scalar();
        RrefResult rr = rref(m, true);
        CHECK(*rr.transform * m == rr.mat);
        ExactMatrix kb = kernel_basis(m);
        CHECK(rank(m) + kb.cols() == 6);
        CHECK((m * kb).is_zero());
    }

    ExactMatrix g(2, 2);
    g.at(0, 0) = GR("2");
    g.at(0, 1) = GR("1");
    g.at(1, 0) = GR("1");
    g.at(1, 1) = GR("1");
    CHECK(g * g.inverse() == ExactMatrix::identity(2));
    CHECK(g.determinant() == GR("1"));
    ExactMatrix singular(2, 2);
    singular.at(0, 0) = GR("1");
    singular.at(1, 0) = GR("1");
    CHECK(singular.determinant() == GR("0"));
    CHECK_THROWS(singular.inverse());
}

TEST_CASE("expression parser round trips and rejects noise") {
    CHECK(P("-1/2*i*m3", 3) == Polynomial::variable(3, 2).scaled(GR("-1/2*i")));
    CHECK(P("(m1+m2)/2", 2) == P("1/2*m1+1/2*m2", 2));
    CHECK_THROWS(P("m4", 3));
    CHECK_THROWS(P("m1^-1", 2));
    CHECK_THROWS(P("m1/(m2)", 2));
    CHECK_THROWS(P("1..2", 2));
}
