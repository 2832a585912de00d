#pragma once

#include "gkmod/lie_algebra.hpp"
#include "gkmod/polynomial.hpp"
#include "gkmod/rep_ops.hpp"
#include "gkmod/variety.hpp"

#include <vector>

namespace gkmod {

// Floats live in this module only. Every rigorous bound is rounded
// outward (nextafter steps after each primitive), so certificates stay
// conservative without interval arithmetic.

double round_up(double x);
double mul_up(double a, double b);
double div_up(double a, double b);

// The matrix-entry constant with |(g m)^2 - m^2| <= kappa * m^2:
//   max_i |g_ii^2 - 1| + max_{k != i} g_ki^2 + max_{k; i<j} |g_ki g_kj|.
// For the truncation error of pi_k(g) evaluate it on the matrix of g^{-1}.
Rational kappa(const ExactMatrix& g_matrix);

// (l/lambda)^l e^{-l} / l!, the Gaussian tail supremum
//   (1/l!) sup_{y>=0} y^l e^{-lambda y},
// evaluated with upward rounding; l = 0 gives 1.
double tail_sigma(int l, const Rational& lambda);

// Rigorous upper bound for sup_m |p(m)| e^{-sigma m^2} over any subset of
// R^n: sum_beta |c_beta| (|beta|/(2 sigma))^{|beta|/2} e^{-|beta|/2}.
double sup_norm_upper(const Polynomial& p, const Rational& sigma);

// Sampled lower estimate of the same supremum over the variety. The
// radius grows until the term bound beyond it falls under 1e-3 of the
// running max. Deterministic for a fixed seed.
double sup_norm_sample(const Polynomial& p, const Rational& sigma, const Variety& v, int budget,
                       unsigned seed = 0);

// Polynomial part of the truncated group action:
//   pi_k(g) [p e^{-r^2}] = rho(g)p * sum_{j=0}^k (r^2 - rho(g) r^2)^j / j! * e^{-r^2},
// computed exactly in Q(i).
Polynomial pi_k(const GroupElement& g, const Polynomial& p, int k, const Variety& v);

struct ApproxCertificate {
    ExactMatrix g;
    Rational kappa_of_g;       // formula on g itself (reported)
    Rational kappa_of_g_inv;   // formula on g^{-1}; drives the bound
    int k = 0;                 // truncation order of the certified operator pi_{k-1}
    double c_upper = 0;        // rigorous prefactor bound (2x safety included)
    double tail = 0;           // rigorous bound on ||pi(g)phi - pi_{k-1}(g)phi||
    double empirical_sup = 0;  // sampled lower estimate of the same error
    bool valid = false;        // kappa(g^{-1}) <= 1/4; otherwise advisory only
};

ApproxCertificate certify(const GroupElement& g, const Polynomial& p, int k, const Variety& v,
                          int budget, unsigned seed = 0);

// Upper bound for the sup norm of the l-th series term of the expanded
// group action: C * kappa^l (2l)^l e^{-l} / l!  ( = C * tail_sigma(l, 1/(2 kappa)) ).
double series_term_bound(int l, const Rational& kappa_value, double c_upper);

// Grid supremum of |e^{-rho x^2} (e^{kappa x^2} - sum_{j<l} (kappa x^2)^j / j!)|
// over x in [0, x_max]; the quantity the Gaussian tail bound dominates.
double lemma1_defect_grid_sup(int l, const Rational& kappa_value, const Rational& rho, double x_max,
                              int grid_points);

// Deterministic quasi-random points of the variety inside |m| <= radius
// (Halton sequence; hypersurfaces are lifted through the solvable square).
std::vector<std::vector<double>> sample_points(const Variety& v, int budget, double radius,
                                               unsigned seed);

}  // namespace gkmod
