#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmod/approx.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace gkmod;
using test::GR;
using test::P;

namespace {

const Variety kPlane = Variety::affine(2);

ExactMatrix mat2(const char* a, const char* b, const char* c, const char* d) {
    ExactMatrix m(2, 2);
    m.at(0, 0) = GR(a);
    m.at(0, 1) = GR(b);
    m.at(1, 0) = GR(c);
    m.at(1, 1) = GR(d);
    return m;
}

}  // namespace

TEST_CASE("kappa: the three-term matrix-entry constant") {
    CHECK(kappa(ExactMatrix::identity(3)) == 0);
    CHECK(kappa(mat2("2", "0", "0", "1/2")) == 3);
    CHECK(kappa(mat2("1", "1/2", "0", "1")) == make_rational(3, 4));
    // The certificate matrix: kappa(g^{-1}) = 1/100 + 1/10.
    CHECK(kappa(mat2("1", "-1/10", "0", "1")) == make_rational(11, 100));
}

TEST_CASE("tail_sigma matches the analytic supremum and rounds upward") {
    CHECK(tail_sigma(0, make_rational(7, 2)) == 1.0);

    // Numeric maximization oracle: sup_y y^l e^{-lambda y} / l! on a fine grid.
    auto grid_oracle = [](int l, double lambda) {
        double best = 0.0;
        for (int k = 0; k <= 400000; ++k) {
            double y = k * (4.0 * l + 8.0) / 400000.0;
            double logv = l * std::log(std::max(y, 1e-300)) - lambda * y;
            for (int j = 1; j <= l; ++j) logv -= std::log(j);
            best = std::max(best, std::exp(logv));
        }
        return best;
    };
    CHECK(tail_sigma(1, Rational(1)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(tail_sigma(1, Rational(1)) == doctest::Approx(grid_oracle(1, 1.0)).epsilon(1e-6));
    CHECK(tail_sigma(4, Rational(2)) == doctest::Approx(0.012213).epsilon(1e-4));
    CHECK(tail_sigma(4, Rational(2)) == doctest::Approx(grid_oracle(4, 2.0)).epsilon(1e-6));
    CHECK(tail_sigma(11, make_rational(5, 2)) ==
          doctest::Approx(grid_oracle(11, 2.5)).epsilon(1e-6));

    // Upper-bound direction: never below the long-double evaluation.
    for (int l : {1, 3, 7, 15, 40}) {
        long double exact = 1.0L;
        for (int j = 1; j <= l; ++j) exact *= (static_cast<long double>(l) / 1.0L) * expl(-1.0L) / j;
        CHECK(tail_sigma(l, Rational(1)) >= static_cast<double>(exact) * (1 - 1e-14));
    }

    // Monotone decrease for lambda >= 1 once l >= lambda.
    for (Rational lambda : {Rational(1), Rational(2), Rational(4)}) {
        double prev = HUGE_VAL;
        for (int l = static_cast<int>(lambda.get_d()); l <= 60; ++l) {
            double ts = tail_sigma(l, lambda);
            CHECK(ts < prev);
            prev = ts;
        }
    }
    CHECK(tail_sigma(40, Rational(1)) < tail_sigma(39, Rational(1)));
    CHECK_THROWS(tail_sigma(-1, Rational(1)));
    CHECK_THROWS(tail_sigma(3, Rational(0)));
}

TEST_CASE("sup_norm_upper: rigorous termwise bound") {
    CHECK(sup_norm_upper(P("1", 2), make_rational(1, 2)) >= 1.0);
    CHECK(sup_norm_upper(P("1", 2), make_rational(1, 2)) <= 1.0 + 1e-12);

    // Calculus maximum of m1^2 e^{-m^2/2} is 2/e.
    double bound = sup_norm_upper(P("m1^2", 2), make_rational(1, 2));
    CHECK(bound == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-12));

    // Two unit-coefficient terms of degree 1.
    double qp = sup_norm_upper(P("m1+i*m2", 2), make_rational(1, 2));
    CHECK(qp == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-12));
    CHECK(qp == doctest::Approx(1.2131).epsilon(1e-4));

    // Grid oracle: bound dominates the sampled true sup everywhere.
    test::PolyRng rng(401);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = rng.poly(2, 4);
        double ub = sup_norm_upper(p, make_rational(1, 2));
        double seen = 0.0;
        for (double x = -6; x <= 6; x += 0.25)
            for (double y = -6; y <= 6; y += 0.25) {
                std::vector<double> pt = {x, y};
                seen = std::max(seen,
                                std::abs(p.evaluate(pt)) * std::exp(-(x * x + y * y) / 2.0));
            }
        CHECK(seen <= ub * (1 + 1e-12));
    }
}

TEST_CASE("sup_norm_sample is a lower estimate converging from below") {
    CHECK(sup_norm_sample(P("0", 2), make_rational(1, 2), kPlane, 10) == 0.0);
    double target = 2.0 * std::exp(-1.0);
    double small_budget = sup_norm_sample(P("m1^2", 2), make_rational(1, 2), kPlane, 50);
    double big_budget = sup_norm_sample(P("m1^2", 2), make_rational(1, 2), kPlane, 5000);
    CHECK(small_budget <= target * (1 + 1e-12));
    CHECK(big_budget <= target * (1 + 1e-12));
    CHECK(big_budget >= small_budget * (1 - 1e-12));
    CHECK(big_budget > 0.95 * target);
    CHECK_THROWS(sup_norm_sample(P("1", 2), make_rational(1, 2), kPlane, 0));

    // Hypersurface sampling stays on the surface.
    Variety quad = test::nxi_variety(1);
    for (const auto& pt : sample_points(quad, 100, 2.0, 7)) {
        double pg = -pt[0] * pt[0] - pt[1] * pt[1] + pt[2] * pt[2];
        CHECK(pg == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pi_k: exact truncated action") {
    GroupElement id(ExactMatrix::identity(2));
    test::PolyRng rng(419);
    for (int k : {0, 1, 3}) {
        Polynomial p = rng.poly(2, 3);
        CHECK(pi_k(id, p, k, kPlane) == p);
    }

    GroupElement g(mat2("2", "0", "0", "1/2"));
    Polynomial p = rng.poly(2, 2);
    CHECK(pi_k(g, p, 0, kPlane) == rho_substitute(g, p, kPlane));
    CHECK(pi_k(g, P("1", 2), 1, kPlane) == P("1+3/4*m1^2-3*m2^2", 2));
}

TEST_CASE("pi_k converges pointwise with k for small kappa") {
    GroupElement g(mat2("1", "1/10", "0", "1"));
    REQUIRE(kappa(g.inv) == make_rational(11, 100));
    Polynomial p = P("1+m1", 2);
    std::vector<std::vector<double>> pts;
    for (double x = -3; x <= 3; x += 1.5)
        for (double y = -3; y <= 3; y += 1.5) pts.push_back({x, y});
    std::vector<double> ginv = {1.0, -0.1, 0.0, 1.0};
    double prev = HUGE_VAL;
    for (int k = 0; k <= 8; ++k) {
        Polynomial tr = pi_k(g, p, k, kPlane);
        double worst = 0.0;
        for (const auto& pt : pts) {
            std::vector<double> moved = {ginv[0] * pt[0] + ginv[1] * pt[1],
                                         ginv[2] * pt[0] + ginv[3] * pt[1]};
            double m2 = pt[0] * pt[0] + pt[1] * pt[1];
            double w2 = moved[0] * moved[0] + moved[1] * moved[1];
            std::complex<double> exact = p.evaluate(moved) * std::exp(-w2);
            std::complex<double> approx = tr.evaluate(pt) * std::exp(-m2);
            worst = std::max(worst, std::abs(exact - approx));
        }
        CHECK(worst <= prev + 1e-15);
        prev = worst;
    }
    CHECK(prev < 1e-9);
}

TEST_CASE("certificates: soundness and decay") {
    GroupElement id(ExactMatrix::identity(2));
    ApproxCertificate trivial = certify(id, P("1", 2), 3, kPlane, 200);
    CHECK(trivial.valid);
    CHECK(trivial.tail == 0.0);
    CHECK(trivial.empirical_sup <= 1e-12);

    GroupElement g(mat2("1", "1/10", "0", "1"));
    double prev_tail = HUGE_VAL;
    for (int k = 1; k <= 8; ++k) {
        ApproxCertificate cert = certify(g, P("1", 2), k, kPlane, 800, 5);
        CHECK(cert.valid);
        CHECK(cert.kappa_of_g_inv == make_rational(11, 100));
        CHECK(cert.empirical_sup <= cert.tail);
        CHECK(cert.tail < prev_tail);
        prev_tail = cert.tail;
    }

    // Advisory flag for group elements outside the small neighbourhood.
    ApproxCertificate far = certify(GroupElement(mat2("2", "0", "0", "1/2")), P("1", 2), 2, kPlane,
                                    100);
    CHECK_FALSE(far.valid);
}

TEST_CASE("series term bounds track the coarse asymptotic within factor 3") {
    Rational kap = make_rational(11, 100);
    for (int l = 5; l <= 30; ++l) {
        double bound = series_term_bound(l, kap, 1.0);
        double asym = std::pow(2.0 * kap.get_d(), l) / std::sqrt(static_cast<double>(l));
        double ratio = bound / asym;
        CHECK(ratio > 1.0 / 3.0);
        CHECK(ratio < 3.0);
    }
}

TEST_CASE("uniform convergence probe: grid defect under the tail bound") {
    Rational kap = make_rational(1, 8), rho = make_rational(1, 4);
    Rational lambda = rho / kap - 1;
    REQUIRE(lambda == 1);
    double prev = HUGE_VAL;
    for (int l = 1; l <= 40; ++l) {
        double sup = lemma1_defect_grid_sup(l, kap, rho, 8.0, 801);
        double ts = tail_sigma(l, lambda);
        CHECK(sup <= ts + 1e-9);
        CHECK(ts < prev);
        prev = ts;
    }
    // The defect itself collapses far faster than the l-uniform bound.
    CHECK(lemma1_defect_grid_sup(40, kap, rho, 8.0, 801) < 1e-12);
}
