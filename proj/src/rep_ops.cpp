#include "gkmod/rep_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace gkmod {

Polynomial apply_drho(const LieElement& x, const Polynomial& p, const Variety& v) {
    const int n = v.ambient_dim();
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("Lie element size != ambient_dim");
    if (p.ambient_dim() != n) throw std::invalid_argument("polynomial ambient dimension mismatch");
    Polynomial out(n);
    for (int i = 0; i < n; ++i) {
        Polynomial dp = p.partial(i);
        if (dp.is_zero()) continue;
        // -(X m)_i = -sum_k X_{ik} m_k
        Polynomial field(n);
        for (int k = 0; k < n; ++k) {
            if (x.at(i, k).is_zero()) continue;
            Monomial mono(n, 0);
            mono[k] = 1;
            field.add_term(mono, -x.at(i, k));
        }
        if (!field.is_zero()) out += field * dp;
    }
    return v.normal_form(out);
}

Polynomial drho_of_r2(const LieElement& x, const Variety& v) {
    return apply_drho(x, v.r2(), v);
}

Polynomial apply_dpi_prime(const LieElement& x, const Polynomial& p, const Variety& v) {
    if (p.is_zero()) return p;
    Polynomial d = apply_drho(x, p, v);
    Polynomial mult = drho_of_r2(x, v);
    if (mult.is_zero()) return d;
    return v.normal_form(d - mult * p);
}

OperatorWord OperatorWord::then(const LieElement& x, OpTag tag) const {
    OperatorWord w;
    w.factors.reserve(factors.size() + 1);
    w.factors.emplace_back(x, tag);
    w.factors.insert(w.factors.end(), factors.begin(), factors.end());
    return w;
}

Polynomial apply_word(const OperatorWord& w, const Polynomial& p, const Variety& v) {
    Polynomial cur = v.normal_form(p);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        cur = it->second == OpTag::dpi_prime ? apply_dpi_prime(it->first, cur, v)
                                             : apply_drho(it->first, cur, v);
        if (cur.is_zero()) break;
    }
    return cur;
}

Polynomial apply_word_sum(const WordSum& ws, const Polynomial& p, const Variety& v) {
    Polynomial acc(v.ambient_dim());
    for (const auto& [c, w] : ws.terms) {
        if (c.is_zero()) continue;
        acc += apply_word(w, p, v).scaled(c);
    }
    return acc;
}

Polynomial rho_substitute(const GroupElement& g, const Polynomial& p, const Variety& v) {
    const int n = v.ambient_dim();
    if (g.dim() != n) throw std::invalid_argument("group element size != ambient_dim");
    if (v.has_ideal()) {
        // The substitution descends to the quotient only when g maps the
        // ideal into itself; for a principal ideal with same-degree image
        // that means rho(g) gen is a scalar multiple of gen.
        Polynomial moved = v.ideal_generator().substitute_linear(g.inv);
        if (!v.normal_form(moved).is_zero())
            throw std::invalid_argument(
                "group element does not preserve the ideal: rho(g) applied to the generator "
                "is not in the ideal");
    }
    return v.normal_form(p.substitute_linear(g.inv));
}

bool check_hom_identity(const LieElement& x, const LieElement& y, int max_degree, const Variety& v) {
    LieElement br = bracket(x, y);
    for (const auto& mono : v.nf_monomials_up_to(max_degree)) {
        Polynomial p = Polynomial::monomial(v.ambient_dim(), mono, GaussianRational::one());
        Polynomial lhs = apply_dpi_prime(br, p, v);
        Polynomial rhs = apply_dpi_prime(x, apply_dpi_prime(y, p, v), v) -
                         apply_dpi_prime(y, apply_dpi_prime(x, p, v), v);
        if (lhs != rhs) return false;
    }
    return true;
}

ExactMatrix operator_matrix(const std::function<Polynomial(const Polynomial&)>& action,
                            int max_degree, const Variety& v) {
    auto monos = v.nf_monomials_up_to(max_degree);
    std::map<Monomial, size_t> index;
    for (size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
    ExactMatrix m(static_cast<int>(monos.size()), static_cast<int>(monos.size()));
    for (size_t j = 0; j < monos.size(); ++j) {
        Polynomial img = action(Polynomial::monomial(v.ambient_dim(), monos[j], GaussianRational::one()));
        for (const auto& [mono, c] : img.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::domain_error("operator image leaves the degree bound at monomial " +
                                        monomial_to_string(monos[j]) + " (image term " +
                                        monomial_to_string(mono) + ")");
            m.at(static_cast<int>(it->second), static_cast<int>(j)) = c;
        }
    }
    return m;
}

double ad_equivariance_check(const GroupElement& g, const LieElement& x, const Polynomial& p,
                             const Variety& v, const std::vector<std::vector<double>>& points) {
    // Left side: pi(g) dpi(X) phi = [rho(g) dpi'(X) p](m) * exp(-(g^-1 m)^2).
    Polynomial lhs_poly = rho_substitute(g, apply_dpi_prime(x, v.normal_form(p), v), v);

    // Right side: dpi(Ad(g)X) applied as a derivation to the closed form
    // A(m) * exp(-B(m)) with A = rho(g)p and B = rho(g)r^2:
    //   [drho(Y) A - (drho(Y) B) * A](m) * exp(-B(m)),  Y = Ad(g)X.
    LieElement y = ad_action(g, x);
    Polynomial a = rho_substitute(g, v.normal_form(p), v);
    Polynomial b = v.normal_form(v.r2().substitute_linear(g.inv));
    Polynomial drho_b(v.ambient_dim());
    {
        // Same derivation as apply_drho but with B in place of r^2.
        const int n = v.ambient_dim();
        for (int i = 0; i < n; ++i) {
            Polynomial dp = b.partial(i);
            if (dp.is_zero()) continue;
            Polynomial field(n);
            for (int k = 0; k < n; ++k) {
                if (y.at(i, k).is_zero()) continue;
                Monomial mono(n, 0);
                mono[k] = 1;
                field.add_term(mono, -y.at(i, k));
            }
            if (!field.is_zero()) drho_b += field * dp;
        }
        drho_b = v.normal_form(drho_b);
    }
    Polynomial rhs_poly = v.normal_form(apply_drho(y, a, v) - drho_b * a);

    // Both sides share the factor exp(-(g^-1 m)^2) = exp(-B(m)).
    double max_resid = 0.0;
    for (const auto& pt : points) {
        std::complex<double> lv = lhs_poly.evaluate(pt);
        std::complex<double> rv = rhs_poly.evaluate(pt);
        double weight = std::exp(-b.evaluate(pt).real());
        max_resid = std::max(max_resid, std::abs(lv - rv) * weight);
    }
    return max_resid;
}

}  // namespace gkmod
