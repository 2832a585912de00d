#include "gkmod/variety.hpp"

#include <stdexcept>

namespace gkmod {

Variety::Variety(int n, MonomialOrder order, std::optional<Polynomial> gen)
    : n_(n), order_(std::move(order)), gen_(std::move(gen)), r2_nf_(n) {
    if (order_.n() != n_) throw std::invalid_argument("variable ranking length != ambient_dim");
    if (gen_) {
        if (gen_->ambient_dim() != n_) throw std::invalid_argument("ideal generator dimension mismatch");
        if (gen_->degree() <= 0) throw std::invalid_argument("ideal generator must be non-constant");
        Monomial lead = gen_->leading_monomial(order_);
        int support = 0;
        for (int v = 0; v < n_; ++v) {
            if (lead[v] > 0) {
                ++support;
                lead_var_ = v;
                lead_exp_ = lead[v];
            }
        }
        if (support != 1)
            throw std::invalid_argument(
                "ideal generator's leading monomial must be a pure power of one variable "
                "(rank that variable highest)");
    }
    r2_nf_ = normal_form(r_squared(n_));
}

Variety Variety::affine(int n) { return Variety(n, MonomialOrder::standard(n), std::nullopt); }

Variety Variety::affine(int n, MonomialOrder order) {
    return Variety(n, std::move(order), std::nullopt);
}

Variety Variety::hypersurface(int n, Polynomial ideal_generator, MonomialOrder order) {
    return Variety(n, std::move(order), std::move(ideal_generator));
}

const Polynomial& Variety::ideal_generator() const {
    if (!gen_) throw std::logic_error("variety has no ideal generator");
    return *gen_;
}

Polynomial Variety::normal_form(const Polynomial& p) const {
    if (p.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
    if (!gen_) return p;
    const GaussianRational lead_coeff = gen_->coeff(gen_->leading_monomial(order_));
    Polynomial rem = p;
    while (true) {
        // Largest reducible monomial: exponent of the lead variable >= lead_exp.
        const Monomial* target = nullptr;
        for (const auto& [m, c] : rem.terms()) {
            if (m[lead_var_] >= lead_exp_ && (target == nullptr || order_.less(*target, m)))
                target = &m;
        }
        if (!target) break;
        Monomial quotient = *target;
        quotient[lead_var_] -= lead_exp_;
        GaussianRational factor = rem.coeff(*target) / lead_coeff;
        rem -= Polynomial::monomial(n_, quotient, factor) * *gen_;
    }
    return rem;
}

Polynomial Variety::ring_mul(const Polynomial& p, const Polynomial& q) const {
    return normal_form(p * q);
}

std::vector<Monomial> Variety::nf_monomials_up_to(int max_degree) const {
    auto all = GradedSubspace::monomials_up_to(n_, max_degree, order_);
    if (!gen_) return all;
    std::vector<Monomial> out;
    for (auto& m : all)
        if (m[lead_var_] < lead_exp_) out.push_back(std::move(m));
    return out;
}

GradedSubspace Variety::full_truncation(int max_degree) const {
    std::vector<Polynomial> vecs;
    for (const auto& m : nf_monomials_up_to(max_degree))
        vecs.push_back(Polynomial::monomial(n_, m, GaussianRational::one()));
    return GradedSubspace::from_vectors(vecs, n_, max_degree, order_);
}

std::optional<std::pair<int, Polynomial>> Variety::solvable_square() const {
    if (!gen_ || lead_exp_ != 2) return std::nullopt;
    const Monomial lead = gen_->leading_monomial(order_);
    const GaussianRational c = gen_->coeff(lead);
    Polynomial tail = *gen_ - Polynomial::monomial(n_, lead, c);
    for (const auto& [m, coeff] : tail.terms())
        if (m[lead_var_] != 0) return std::nullopt;
    // c*m_v^2 + tail = 0  =>  m_v^2 = -tail/c
    return std::make_pair(lead_var_, tail.scaled(-(c.inverse())));
}

}  // namespace gkmod
