#include "gkmod/approx.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gkmod {

double round_up(double x) { return std::nextafter(x, HUGE_VAL); }
double mul_up(double a, double b) { return round_up(a * b); }
double div_up(double a, double b) { return round_up(a / b); }

namespace {

// exp with two ulps of upward slack (libm is faithfully rounded).
double exp_up(double x) { return round_up(round_up(std::exp(x))); }

// Product of positive factors with overflow-safe exponent tracking,
// every step rounded up.
class UpProduct {
public:
    void multiply(double f) {
        mant_ = mul_up(mant_, f);
        int e = 0;
        mant_ = std::frexp(mant_, &e);
        mant_ = round_up(mant_);
        exp2_ += e;
    }
    double value() const {
        if (exp2_ > 2000) return HUGE_VAL;
        if (exp2_ < -2000) return std::numeric_limits<double>::min();
        double v = std::ldexp(mant_, exp2_);
        if (v <= 0) return std::numeric_limits<double>::min();
        return round_up(v);
    }

private:
    double mant_ = 1.0;
    int exp2_ = 0;
};

}  // namespace

Rational kappa(const ExactMatrix& g_matrix) {
    if (g_matrix.rows() != g_matrix.cols()) throw std::invalid_argument("kappa needs a square matrix");
    const int n = g_matrix.rows();
    auto real_part = [&](int r, int c) -> Rational {
        const GaussianRational& e = g_matrix.at(r, c);
        if (e.im != 0) throw std::invalid_argument("kappa is defined for real matrices");
        return e.re;
    };
    Rational diag(0), offdiag(0), rowprod(0);
    for (int i = 0; i < n; ++i) {
        Rational d(abs(real_part(i, i) * real_part(i, i) - 1));
        if (d > diag) diag = d;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (k == i) continue;
            Rational s(real_part(k, i) * real_part(k, i));
            if (s > offdiag) offdiag = s;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational pr(abs(real_part(k, i) * real_part(k, j)));
                if (pr > rowprod) rowprod = pr;
            }
    return diag + offdiag + rowprod;
}

double tail_sigma(int l, const Rational& lambda) {
    if (l < 0) throw std::invalid_argument("negative series index");
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    if (l == 0) return 1.0;
    // (l/lambda)^l e^{-l} / l! as a product of l factors (l/lambda) e^{-1} / j.
    double ratio_up = to_double_up(Rational(l) / lambda);
    double base = mul_up(ratio_up, exp_up(-1.0));
    UpProduct prod;
    for (int j = 1; j <= l; ++j) prod.multiply(div_up(base, static_cast<double>(j)));
    return prod.value();
}

double sup_norm_upper(const Polynomial& p, const Rational& sigma) {
    if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
    double total = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        int d = monomial_degree(mono);
        double term;
        if (d == 0) {
            term = c.abs_upper();
        } else {
            // sup_r r^d e^{-sigma r^2} = (d/(2 sigma))^{d/2} e^{-d/2}
            double base = to_double_up(Rational(d) / (2 * sigma));
            UpProduct prod;
            for (int j = 0; j < d; ++j) prod.multiply(base);  // base^d
            double sqrt_up = round_up(std::sqrt(prod.value()));
            term = mul_up(mul_up(c.abs_upper(), sqrt_up), exp_up(-0.5 * d));
        }
        total = round_up(total + term);
    }
    return total;
}

std::vector<std::vector<double>> sample_points(const Variety& v, int budget, double radius,
                                               unsigned seed) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    const int n = v.ambient_dim();
    auto halton = [](long index, int base) {
        double f = 1.0, r = 0.0;
        while (index > 0) {
            f /= base;
            r += f * (index % base);
            index /= base;
        }
        return r;
    };

    auto square = v.solvable_square();
    int lift_var = -1;
    if (v.has_ideal()) {
        if (!square)
            throw std::invalid_argument("cannot sample this hypersurface: generator is not a solvable square");
        lift_var = square->first;
    }

    std::vector<std::vector<double>> out;
    out.reserve(budget);
    long index = 1 + static_cast<long>(seed) * 7919;
    int attempts = 0;
    while (static_cast<int>(out.size()) < budget && attempts < budget * 50) {
        ++attempts;
        std::vector<double> pt(n, 0.0);
        int slot = 0;
        for (int vvar = 0; vvar < n; ++vvar) {
            if (vvar == lift_var) continue;
            double u = halton(index, primes[slot % 8]);
            pt[vvar] = (2.0 * u - 1.0) * radius;
            ++slot;
        }
        ++index;
        if (lift_var >= 0) {
            double rhs = square->second.evaluate(pt).real();
            if (rhs < 0) continue;
            pt[lift_var] = (index % 2 == 0) ? std::sqrt(rhs) : -std::sqrt(rhs);
        }
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

// Valid bound for |p(m)| e^{-sigma m^2} on |m| >= R once R passed every
// term's peak radius sqrt(d/(2 sigma)).
double bound_beyond_radius(const Polynomial& p, double sigma, double r) {
    double total = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        int d = monomial_degree(mono);
        total += c.abs_upper() * std::pow(r, d) * std::exp(-sigma * r * r);
    }
    return total;
}

double peak_radius(const Polynomial& p, double sigma) {
    int d = std::max(p.degree(), 0);
    return std::sqrt(std::max(1.0, d / (2.0 * sigma)));
}

}  // namespace

double sup_norm_sample(const Polynomial& p, const Rational& sigma, const Variety& v, int budget,
                       unsigned seed) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (p.is_zero()) return 0.0;
    double sig = sigma.get_d();
    double radius = peak_radius(p, sig);
    double best = 0.0;
    for (int iter = 0; iter < 24; ++iter) {
        for (const auto& pt : sample_points(v, budget, radius, seed + iter)) {
            double m2 = 0.0;
            for (double x : pt) m2 += x * x;
            best = std::max(best, std::abs(p.evaluate(pt)) * std::exp(-sig * m2));
        }
        if (bound_beyond_radius(p, sig, radius) <= 1e-3 * best) break;
        radius *= 1.4;
    }
    return best;
}

Polynomial pi_k(const GroupElement& g, const Polynomial& p, int k, const Variety& v) {
    if (k < 0) throw std::invalid_argument("truncation order must be >= 0");
    Polynomial rp = rho_substitute(g, v.normal_form(p), v);
    Polynomial diff = v.normal_form(v.r2() - rho_substitute(g, v.r2(), v));
    Polynomial acc = Polynomial::constant(v.ambient_dim(), GaussianRational::one());
    Polynomial power = acc;
    Rational factorial(1);
    for (int j = 1; j <= k; ++j) {
        power = v.ring_mul(power, diff);
        factorial *= j;
        acc += power.scaled(GaussianRational(Rational(1) / factorial));
    }
    return v.ring_mul(rp, acc);
}

double series_term_bound(int l, const Rational& kappa_value, double c_upper) {
    if (kappa_value <= 0) throw std::invalid_argument("kappa must be positive here");
    return mul_up(c_upper, tail_sigma(l, Rational(1) / (2 * kappa_value)));
}

ApproxCertificate certify(const GroupElement& g, const Polynomial& p, int k, const Variety& v,
                          int budget, unsigned seed) {
    if (k < 1) throw std::invalid_argument("certificate order must be >= 1");
    ApproxCertificate cert;
    cert.g = g.mat;
    cert.k = k;
    cert.kappa_of_g = kappa(g.mat);
    cert.kappa_of_g_inv = kappa(g.inv);
    cert.valid = cert.kappa_of_g_inv <= Rational(1, 4);

    Polynomial rp = rho_substitute(g, v.normal_form(p), v);
    cert.c_upper = mul_up(2.0, sup_norm_upper(rp, Rational(1, 2)));

    // tail = C * sum_{j>=k} tail_sigma(j, 1/(2 kappa)); consecutive term
    // ratios are <= 2 kappa, so a geometric bound closes the sum.
    const Rational& kap = cert.kappa_of_g_inv;
    if (kap == 0) {
        cert.tail = 0.0;
    } else {
        double ratio_up = to_double_up(2 * kap);
        if (ratio_up >= 1.0) {
            cert.tail = HUGE_VAL;
        } else {
            Rational lambda = Rational(1) / (2 * kap);
            double sum = 0.0;
            double term = 0.0;
            int j = k;
            for (; j < k + 400; ++j) {
                term = tail_sigma(j, lambda);
                sum = round_up(sum + term);
                if (term < 1e-320) break;
            }
            double remainder = div_up(mul_up(term, ratio_up), 1.0 - ratio_up);
            cert.tail = mul_up(cert.c_upper, round_up(sum + remainder));
        }
    }

    // Sampled lower estimate of ||pi(g)phi - pi_{k-1}(g)phi||: evaluate
    // p(g^-1 m) e^{-(g^-1 m)^2} against the truncated polynomial at
    // quasi-random points.
    Polynomial trunc_poly = pi_k(g, p, k - 1, v);
    Polynomial pre = v.normal_form(p);
    const int n = v.ambient_dim();
    std::vector<double> ginv(n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) ginv[r * n + c] = g.inv.at(r, c).re.get_d();

    double kap_d = to_double_up(kap);
    double radius = std::sqrt(std::max(4.0, (pre.degree() + 8) / std::max(0.25, 1.0 - kap_d)));
    radius = std::min(radius, 12.0);
    double best = 0.0;
    for (const auto& pt : sample_points(v, budget, radius, seed)) {
        std::vector<double> moved(n, 0.0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) moved[r] += ginv[r * n + c] * pt[c];
        double m2 = 0.0, w2 = 0.0;
        for (int t = 0; t < n; ++t) {
            m2 += pt[t] * pt[t];
            w2 += moved[t] * moved[t];
        }
        std::complex<double> exact_val = pre.evaluate(moved) * std::exp(-w2);
        std::complex<double> approx_val = trunc_poly.evaluate(pt) * std::exp(-m2);
        best = std::max(best, std::abs(exact_val - approx_val));
    }
    cert.empirical_sup = best;
    return cert;
}

double lemma1_defect_grid_sup(int l, const Rational& kappa_value, const Rational& rho, double x_max,
                              int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
    long double kap = kappa_value.get_d();
    long double rho_d = rho.get_d();
    long double sup = 0.0L;
    for (int gp = 0; gp < grid_points; ++gp) {
        long double x = x_max * gp / (grid_points - 1);
        long double y = kap * x * x;
        long double partial = 0.0L, term = 1.0L;
        for (int j = 0; j < l; ++j) {
            partial += term;
            term *= y / (j + 1);
        }
        long double defect = fabsl(expl(-rho_d * x * x) * (expl(y) - partial));
        sup = std::max(sup, defect);
    }
    return static_cast<double>(sup);
}

}  // namespace gkmod
