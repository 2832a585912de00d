#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmod/rep_ops.hpp"
#include "test_support.hpp"

using namespace gkmod;
using test::GR;
using test::P;

namespace {

const Variety kPlane = Variety::affine(2);
const Variety kSpace = Variety::affine(3);

LieElement std_el(const char* name) { return preset_named_element("sl2_standard", name); }
LieElement adj_el(const char* name) { return preset_named_element("sl2_adjoint", name); }

}  // namespace

TEST_CASE("drho golden values from the papers' closed forms") {
    // Rotation generator: (m1 d2 - m2 d1) m1 = -m2.
    CHECK(apply_drho(std_el("H"), P("m1", 2), kPlane) == P("-m2", 2));
    // Derivations kill constants.
    CHECK(apply_drho(std_el("X+"), P("7", 2), kPlane).is_zero());
    // Highest-weight vectors: X+ annihilates every power of q+.
    for (int k = 1; k <= 8; ++k) {
        Polynomial qk = P("m1+i*m2", 2).pow(k);
        CHECK(apply_drho(std_el("X+"), qk, kPlane).is_zero());
        CHECK(apply_drho(std_el("H"), qk, kPlane) ==
              qk.scaled(GaussianRational(Rational(0), Rational(k))));
    }
    // The adjoint invariant is killed by the whole algebra.
    Polynomial pg = sl2_adjoint_invariant();
    LieAlgebra adj = sl2_adjoint();
    for (const auto& x : adj.basis()) CHECK(apply_drho(x, pg, kSpace).is_zero());
}

TEST_CASE("drho agrees with the numeric flow oracle") {
    test::PolyRng rng(101);
    std::vector<std::vector<double>> pts = {{0.3, -0.7}, {1.1, 0.4}, {-0.5, -0.2}};
    for (const char* name : {"a1", "a2", "a3", "H"}) {
        LieElement x = std_el(name);
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial p = rng.poly(2, 3);
            Polynomial dp = apply_drho(x, p, kPlane);
            for (const auto& m : pts) {
                std::complex<double> oracle = test::drho_flow_oracle(x, p, m);
                CHECK(std::abs(dp.evaluate(m) - oracle) < 1e-7);
            }
        }
    }
}

TEST_CASE("dpi' golden values and the Gaussian flow oracle") {
    // dpi'(H) = drho(H): the rotation fixes r^2.
    CHECK(drho_of_r2(std_el("H"), kPlane).is_zero());
    test::PolyRng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = rng.poly(2, 3);
        CHECK(apply_dpi_prime(std_el("H"), p, kPlane) == apply_drho(std_el("H"), p, kPlane));
    }

    // dpi'(X+) 1 = -(drho(X+) r^2) = -2i q+^2.
    CHECK(apply_dpi_prime(std_el("X+"), P("1", 2), kPlane) == P("-2*i*(m1+i*m2)^2", 2));
    CHECK(apply_dpi_prime(std_el("X-"), P("1", 2), kPlane) == P("2*i*(m1-i*m2)^2", 2));
    CHECK(apply_dpi_prime(std_el("X+"), P("0", 2), kPlane).is_zero());

    // Numeric flow oracle for the full Gaussian-weighted action: only real
    // matrices flow, so test the real basis.
    std::vector<std::vector<double>> pts = {{0.2, 0.5}, {-0.8, 0.1}, {0.9, -0.6}};
    for (const char* name : {"a1", "a2", "a3"}) {
        LieElement x = std_el(name);
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial p = rng.poly(2, 2);
            Polynomial img = apply_dpi_prime(x, p, kPlane);
            for (const auto& m : pts) {
                double m2 = m[0] * m[0] + m[1] * m[1];
                std::complex<double> lhs = img.evaluate(m) * std::exp(-m2);
                std::complex<double> oracle = test::dpi_flow_oracle(x, p, m);
                CHECK(std::abs(lhs - oracle) < 1e-7);
            }
        }
    }
}

TEST_CASE("degree shift: dpi' maps degree l into {l, l+2} on affine space") {
    test::PolyRng rng(107);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = rng.poly(2, 4).homogeneous_part(trial % 2 ? 3 : 2);
        if (p.is_zero()) continue;
        int l = p.degree();
        for (const char* name : {"a1", "a2", "a3"}) {
            Polynomial img = apply_dpi_prime(std_el(name), p, kPlane);
            CHECK(img == img.homogeneous_part(l) + img.homogeneous_part(l + 2));
        }
    }
}

TEST_CASE("Leibniz rule for the derivation") {
    test::PolyRng rng(109);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = rng.poly(2, 3), q = rng.poly(2, 3);
        for (const char* name : {"a1", "H"}) {
            LieElement x = std_el(name);
            CHECK(apply_drho(x, p * q, kPlane) ==
                  apply_drho(x, p, kPlane) * q + p * apply_drho(x, q, kPlane));
        }
    }
}

TEST_CASE("word application composes right-to-left") {
    Polynomial one = P("1", 2);
    CHECK(apply_word(OperatorWord::identity(), one, kPlane) == one);

    // X+ then X- on the constant: first 2i q-^2, then -8 r^2 + 4 r^4.
    Polynomial step1 = apply_dpi_prime(std_el("X-"), one, kPlane);
    CHECK(step1 == P("2*i*(m1-i*m2)^2", 2));
    Polynomial step2 = apply_dpi_prime(std_el("X+"), step1, kPlane);
    Polynomial expected = P("-8*(m1^2+m2^2)+4*(m1^2+m2^2)^2", 2);
    CHECK(step2 == expected);

    OperatorWord w;
    w.factors = {{std_el("X+"), OpTag::dpi_prime}, {std_el("X-"), OpTag::dpi_prime}};
    CHECK(apply_word(w, one, kPlane) == expected);

    // Words in commuting Cartan elements act independently of the order.
    test::PolyRng rng(113);
    LieElement h = std_el("H");
    LieElement h2 = h.scaled(GR("1/2"));
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = rng.poly(2, 3);
        OperatorWord ab, ba;
        ab.factors = {{h, OpTag::dpi_prime}, {h2, OpTag::dpi_prime}};
        ba.factors = {{h2, OpTag::dpi_prime}, {h, OpTag::dpi_prime}};
        CHECK(apply_word(ab, p, kPlane) == apply_word(ba, p, kPlane));
    }
}

TEST_CASE("left regular substitution") {
    ExactMatrix gm(2, 2);
    gm.at(0, 0) = GR("2");
    gm.at(1, 1) = GR("1/2");
    GroupElement g(gm);
    GroupElement id(ExactMatrix::identity(2));
    test::PolyRng rng(127);

    CHECK(rho_substitute(id, P("m1^3+m2", 2), kPlane) == P("m1^3+m2", 2));
    CHECK(rho_substitute(g, P("m1", 2), kPlane) == P("1/2*m1", 2));

    // The Pythagorean rotation [[3/5,-4/5],[4/5,3/5]] scales q+ by (3-4i)/5.
    GroupElement rot =
        preset_torus_element("sl2_standard", make_rational(3, 5), make_rational(-4, 5));
    Polynomial moved = rho_substitute(rot, P("m1+i*m2", 2), kPlane);
    CHECK(moved == P("m1+i*m2", 2).scaled(GR("3/5-4/5*i")));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> pt = {rng.rational(9, 5), rng.rational(9, 5)};
        // g^{-1} = [[3/5,4/5],[-4/5,3/5]].
        std::vector<Rational> back = {Rational(3, 5) * pt[0] + Rational(4, 5) * pt[1],
                                      Rational(-4, 5) * pt[0] + Rational(3, 5) * pt[1]};
        CHECK(moved.evaluate_exact(pt) == P("m1+i*m2", 2).evaluate_exact(back));
    }

    // rho(gh) = rho(g) rho(h).
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix u(2, 2);
        u.at(0, 0) = u.at(1, 1) = GR("1");
        u.at(0, 1) = GaussianRational(rng.rational(3, 3));
        GroupElement h(u), gh(gm * u);
        Polynomial p = rng.poly(2, 3);
        CHECK(rho_substitute(gh, p, kPlane) == rho_substitute(g, rho_substitute(h, p, kPlane), kPlane));
    }
}

TEST_CASE("substitution on a quotient requires the ideal to be preserved") {
    Variety v = test::nxi_variety(1);
    // The adjoint action preserves the invariant exactly. The transported
    // rotation turns the (m1, m2) plane by the doubled angle: cos = -7/25,
    // sin = 24/25 for (c, s) = (3/5, 4/5).
    GroupElement rot = preset_torus_element("sl2_adjoint", make_rational(3, 5), make_rational(4, 5));
    CHECK(rho_substitute(rot, P("m1", 3), v) == P("-7/25*m1+24/25*m2", 3));

    // A generic diagonal stretch does not fix the level set.
    ExactMatrix bad(3, 3);
    bad.at(0, 0) = GR("2");
    bad.at(1, 1) = GR("1");
    bad.at(2, 2) = GR("1");
    CHECK_THROWS_WITH_AS(rho_substitute(GroupElement(bad), P("m1", 3), v),
                         doctest::Contains("ideal"), std::invalid_argument);
}

TEST_CASE("operator homomorphism identity at truncation") {
    CHECK(check_hom_identity(std_el("X+"), std_el("X-"), 6, kPlane));
    CHECK(check_hom_identity(std_el("X+"), std_el("X+"), 4, kPlane));
    LieAlgebra adj = sl2_adjoint();
    for (int i = 0; i < adj.dim(); ++i)
        for (int j = i + 1; j < adj.dim(); ++j)
            CHECK(check_hom_identity(adj.basis()[i], adj.basis()[j], 4, kSpace));
}

TEST_CASE("weight ladder: dpi'(X+-) shifts rotation eigenvalues by +-2") {
    // Eigenvectors of drho(H) with eigenvalue i*l: q+^a q-^b r^{2c}, l = a - b.
    Polynomial qp = P("m1+i*m2", 2), qm = P("m1-i*m2", 2), r2 = P("m1^2+m2^2", 2);
    LieElement h = std_el("H");
    test::PolyRng rng(131);
    for (int trial = 0; trial < 12; ++trial) {
        int a = static_cast<int>(rng.rng() % 3), b = static_cast<int>(rng.rng() % 3);
        int c = static_cast<int>(rng.rng() % 2);
        Polynomial p = qp.pow(a) * qm.pow(b) * r2.pow(c);
        int l = a - b;
        REQUIRE(apply_drho(h, p, kPlane) == p.scaled(GaussianRational(Rational(0), Rational(l))));
        for (int sgn : {+1, -1}) {
            Polynomial img = apply_dpi_prime(std_el(sgn > 0 ? "X+" : "X-"), p, kPlane);
            if (img.is_zero()) continue;
            CHECK(apply_drho(h, img, kPlane) ==
                  img.scaled(GaussianRational(Rational(0), Rational(l + 2 * sgn))));
        }
    }
}

TEST_CASE("conjugation identity holds pointwise") {
    std::vector<std::vector<double>> grid;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            grid.push_back({-1.0 + 0.5 * a, -1.0 + 0.5 * b});

    GroupElement id(ExactMatrix::identity(2));
    CHECK(ad_equivariance_check(id, std_el("a1"), P("1", 2), kPlane, grid) == 0.0);

    ExactMatrix gm(2, 2);
    gm.at(0, 0) = GR("2");
    gm.at(1, 1) = GR("1/2");
    CHECK(ad_equivariance_check(GroupElement(gm), std_el("a1"), P("1", 2), kPlane, grid) <= 1e-12);

    test::PolyRng rng(137);
    ExactMatrix u(2, 2);
    u.at(0, 0) = u.at(1, 1) = GR("1");
    u.at(1, 0) = GR("1/3");
    CHECK(ad_equivariance_check(GroupElement(u), std_el("a2"), P("0", 2), kPlane, grid) == 0.0);
}
