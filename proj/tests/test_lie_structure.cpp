#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmod/lie_algebra.hpp"
#include "test_support.hpp"

using namespace gkmod;
using test::GR;

namespace {

LieElement scaled_by_i(const LieElement& x, long mult) {
    return x.scaled(GaussianRational(Rational(0), Rational(mult)));
}

}  // namespace

TEST_CASE("sl2 bracket relations at the matrix level") {
    LieElement xp = preset_named_element("sl2_standard", "X+");
    LieElement xm = preset_named_element("sl2_standard", "X-");
    LieElement h = preset_named_element("sl2_standard", "H");

    CHECK(bracket(xp, xm) == scaled_by_i(h, -4));   // [X+, X-] = -4i H
    CHECK(bracket(h, xp) == scaled_by_i(xp, 2));    // [H, X+] = 2i X+ = alpha(H) X+
    CHECK(bracket(h, xm) == scaled_by_i(xm, -2));
    CHECK(bracket(xp, xp).is_zero());               // antisymmetry

    // alpha(Y) = i (Y_12 - Y_21) evaluated on H gives 2i.
    GaussianRational alpha_h = GaussianRational::i() * (h.at(0, 1) - h.at(1, 0));
    CHECK(alpha_h == GR("2*i"));
}

TEST_CASE("structure constants reproduce brackets and satisfy Jacobi") {
    for (const char* preset : {"sl2_standard", "sl2_adjoint"}) {
        LieAlgebra lie = preset == std::string("sl2_standard") ? sl2_standard() : sl2_adjoint();
        const auto& c = lie.structure_constants();
        const int d = lie.dim();
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                LieElement rebuilt(lie.ambient_dim(), lie.ambient_dim());
                for (int k = 0; k < d; ++k) rebuilt = rebuilt + lie.basis()[k].scaled(c[i][j][k]);
                CHECK(rebuilt == bracket(lie.basis()[i], lie.basis()[j]));
            }
        }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    LieElement jac =
                        bracket(lie.basis()[i], bracket(lie.basis()[j], lie.basis()[k])) +
                        bracket(lie.basis()[j], bracket(lie.basis()[k], lie.basis()[i])) +
                        bracket(lie.basis()[k], bracket(lie.basis()[i], lie.basis()[j]));
                    CHECK(jac.is_zero());
                }
    }
}

TEST_CASE("lie algebra constructor rejects broken data") {
    ExactMatrix a1(2, 2), a2(2, 2);
    a1.at(0, 1) = GR("1");
    a2.at(1, 0) = GR("1");
    // [a1, a2] = diag(1, -1) escapes the span of {a1, a2}.
    CHECK_THROWS(LieAlgebra(2, {a1, a2}));
    CHECK_THROWS(LieAlgebra(2, {a1, a1}));  // dependent basis

    // Non-commuting "Cartan" pair.
    LieAlgebra good = sl2_standard();
    CHECK_THROWS(LieAlgebra(2, good.basis(), std::nullopt, {good.basis()[0], good.basis()[2]}));
}

TEST_CASE("Ad is an exact group action") {
    LieElement a1 = preset_named_element("sl2_standard", "a1");
    ExactMatrix gmat(2, 2);
    gmat.at(0, 0) = GR("2");
    gmat.at(1, 1) = GR("1/2");
    GroupElement g(gmat);
    CHECK(ad_action(g, a1) == a1.scaled(GR("4")));  // diag(2,1/2) a1 diag(1/2,2) = 4 a1

    GroupElement id(ExactMatrix::identity(2));
    CHECK(ad_action(id, a1) == a1);

    test::PolyRng rng(61);
    LieAlgebra lie = sl2_standard();
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m1(2, 2), m2(2, 2);
        // Unipotent times diagonal keeps everything exactly invertible.
        m1.at(0, 0) = m1.at(1, 1) = GR("1");
        m1.at(0, 1) = GaussianRational(rng.rational(3, 2));
        m2.at(0, 0) = GR("2");
        m2.at(1, 1) = GR("1/2");
        m2.at(1, 0) = GaussianRational(rng.rational(3, 2));
        GroupElement ga(m1), gb(m2), gab(m1 * m2);
        LieElement x = lie.basis()[0].scaled(GaussianRational(rng.rational())) +
                       lie.basis()[2].scaled(GaussianRational(rng.rational()));
        LieElement y = lie.basis()[1].scaled(GaussianRational(rng.rational()));
        CHECK(ad_action(gab, x) == ad_action(ga, ad_action(gb, x)));
        CHECK(ad_action(ga, bracket(x, y)) == bracket(ad_action(ga, x), ad_action(ga, y)));
    }
}

TEST_CASE("group elements require exact inverses") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = GR("1");
    m.at(0, 1) = GR("1");
    CHECK_THROWS(GroupElement(m));  // singular
    ExactMatrix good = ExactMatrix::identity(2);
    CHECK_THROWS(GroupElement(good, good.scaled(GR("2"))));  // wrong inverse supplied
}

TEST_CASE("adjoint embedding matches the hand-computed action on coordinates") {
    LieAlgebra adj = sl2_adjoint();
    // The rotation generator moves coordinates by (-2 m2, 2 m1, 0).
    ExactMatrix expected(3, 3);
    expected.at(0, 1) = GR("-2");
    expected.at(1, 0) = GR("2");
    CHECK(adj.k_generator() == expected);

    // ad is a homomorphism: embedding the bracket equals the bracket of
    // embeddings (Jacobi identity transported through the frame).
    LieAlgebra std2 = sl2_standard();
    const auto& frame = sl2_adjoint_frame();
    test::PolyRng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        LieElement x(2, 2), y(2, 2);
        for (int k = 0; k < 3; ++k) {
            x = x + std2.basis()[k].scaled(GaussianRational(rng.rational()));
            y = y + std2.basis()[k].scaled(GaussianRational(rng.rational()));
        }
        CHECK(adjoint_embed_element(bracket(x, y), frame) ==
              bracket(adjoint_embed_element(x, frame), adjoint_embed_element(y, frame)));
    }

    // [X, X] = 0: the embedded element annihilates its own coordinates.
    LieElement a1 = preset_named_element("sl2_standard", "a1");
    LieElement b1 = adjoint_embed_element(a1, frame);
    // a1 = (a1+a2)/2 + (a1-a2)/2 has frame coordinates (1/2, 0, 1/2).
    std::vector<GaussianRational> coords = {GR("1/2"), GR("0"), GR("1/2")};
    for (const auto& entry : b1.apply(coords)) CHECK(entry.is_zero());

    // Degenerate frames are rejected.
    CHECK_THROWS(adjoint_embed_element(a1, {frame[0], frame[0], frame[2]}));
}

TEST_CASE("preset torus elements are exact rotations") {
    GroupElement r = preset_torus_element("sl2_standard", make_rational(3, 5), make_rational(4, 5));
    CHECK(r.mat * r.inv == ExactMatrix::identity(2));
    CHECK_THROWS(preset_torus_element("sl2_standard", make_rational(1, 2), make_rational(1, 2)));

    // The adjoint transport of a rotation is an exact 3x3 rotation fixing m3.
    GroupElement ra = preset_torus_element("sl2_adjoint", make_rational(3, 5), make_rational(4, 5));
    CHECK(ra.mat.at(2, 2) == GR("1"));
    CHECK(ra.mat.at(0, 2) == GR("0"));
    CHECK(ra.mat * ra.inv == ExactMatrix::identity(3));
}
