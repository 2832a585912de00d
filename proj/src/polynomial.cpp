#include "gkmod/polynomial.hpp"

#include "gkmod/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gkmod {

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += "m" + std::to_string(v + 1);
        if (m[v] != 1) out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(int n, GaussianRational c) {
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(Monomial(n, 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int n, int var) {
    if (var < 0 || var >= n) throw std::out_of_range("variable index out of range");
    Monomial m(n, 0);
    m[var] = 1;
    return monomial(n, m, GaussianRational::one());
}

Polynomial Polynomial::monomial(int n, Monomial m, GaussianRational c) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("monomial length != ambient_dim");
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

GaussianRational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational::zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_dim(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial ambient dimension mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dim(o);
    Polynomial out(n_);
    Monomial prod(n_, 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int v = 0; v < n_; ++v) prod[v] = ma[v] + mb[v];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, t] : terms_) out.terms_.emplace(m, t * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = constant(n_, GaussianRational::one());
    for (int j = 0; j < k; ++j) out = out * *this;
    return out;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= n_) throw std::out_of_range("variable index out of range");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * GaussianRational(m[var]));
    }
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) <= max_degree) out.terms_.emplace(m, c);
    return out;
}

Polynomial Polynomial::homogeneous_part(int l) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == l) out.terms_.emplace(m, c);
    return out;
}

bool Polynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
        int dm = monomial_degree(m);
        if (d == -2) d = dm;
        if (dm != d) return false;
    }
    return true;
}

Polynomial Polynomial::substitute_linear(const ExactMatrix& a) const {
    if (a.rows() != n_ || a.cols() != n_) throw std::invalid_argument("substitution matrix shape mismatch");
    // Linear forms L_i = sum_j a(i,j) m_j, with powers cached per variable.
    std::vector<Polynomial> linear;
    linear.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        Polynomial li(n_);
        for (int j = 0; j < n_; ++j) {
            Monomial m(n_, 0);
            m[j] = 1;
            li.add_term(m, a.at(i, j));
        }
        linear.push_back(std::move(li));
    }
    std::vector<std::vector<Polynomial>> powers(n_);  // powers[i][k] = L_i^k
    for (int i = 0; i < n_; ++i) powers[i].push_back(constant(n_, GaussianRational::one()));

    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(n_, c);
        for (int v = 0; v < n_; ++v) {
            if (m[v] == 0) continue;
            auto& pw = powers[v];
            while (static_cast<int>(pw.size()) <= m[v]) pw.push_back(pw.back() * linear[v]);
            term = term * pw[m[v]];
        }
        out += term;
    }
    return out;
}

GaussianRational Polynomial::evaluate_exact(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("evaluation point dimension mismatch");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        Rational mono(1);
        for (int v = 0; v < n_; ++v) {
            for (int k = 0; k < m[v]; ++k) mono *= point[v];
        }
        acc += c * GaussianRational(mono);
    }
    return acc;
}

std::complex<double> Polynomial::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("evaluation point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        double mono = 1.0;
        for (int v = 0; v < n_; ++v) {
            for (int k = 0; k < m[v]; ++k) mono *= point[v];
        }
        acc += std::complex<double>(c.re.get_d(), c.im.get_d()) * mono;
    }
    return acc;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_) {
        if (best == nullptr || order.less(*best, m)) best = &m;
    }
    return *best;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Print highest degree first for readability.
    std::vector<const std::pair<const Monomial, GaussianRational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return monomial_degree(a->first) > monomial_degree(b->first);
    });
    std::string out;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        std::string cs = c.to_string();
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-', 1) != std::string::npos;
        if (!out.empty()) out += " + ";
        if (monomial_degree(m) == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else if (c == GaussianRational::one()) {
            out += monomial_to_string(m);
        } else {
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + monomial_to_string(m);
        }
    }
    return out;
}

Polynomial r_squared(int n) {
    Polynomial p(n);
    for (int v = 0; v < n; ++v) {
        Monomial m(n, 0);
        m[v] = 2;
        p.add_term(m, GaussianRational::one());
    }
    return p;
}

}  // namespace gkmod
