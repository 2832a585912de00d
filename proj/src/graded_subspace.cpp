#include "gkmod/graded_subspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gkmod {

std::vector<Monomial> GradedSubspace::monomials_up_to(int n, int max_degree,
                                                      const MonomialOrder& order) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    // Enumerate all exponent vectors with total degree <= max_degree.
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.less(b, a); });
    return out;
}

std::vector<GaussianRational> GradedSubspace::coords(const Polynomial& p,
                                                     const std::vector<Monomial>& monomials) {
    std::vector<GaussianRational> v(monomials.size());
    std::map<Monomial, size_t> index;
    for (size_t k = 0; k < monomials.size(); ++k) index.emplace(monomials[k], k);
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::invalid_argument("polynomial exceeds the degree bound");
        v[it->second] = c;
    }
    return v;
}

Polynomial GradedSubspace::from_coords(const std::vector<GaussianRational>& v, int n,
                                       const std::vector<Monomial>& monomials) {
    Polynomial p(n);
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) p.add_term(monomials[k], v[k]);
    return p;
}

GradedSubspace GradedSubspace::from_vectors(const std::vector<Polynomial>& vectors, int n,
                                            int max_degree, const MonomialOrder& order) {
    return from_vectors_with_combos(vectors, n, max_degree, order, nullptr);
}

GradedSubspace GradedSubspace::from_vectors_with_combos(const std::vector<Polynomial>& vectors,
                                                        int n, int max_degree,
                                                        const MonomialOrder& order,
                                                        ExactMatrix* combos) {
    GradedSubspace s(n, max_degree, order);
    for (const auto& p : vectors) {
        if (p.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
        if (p.degree() > max_degree) throw std::invalid_argument("vector exceeds the degree bound");
    }
    if (vectors.empty()) {
        if (combos) *combos = ExactMatrix(0, 0);
        return s;
    }
    auto monos = monomials_up_to(n, max_degree, order);
    ExactMatrix m(static_cast<int>(vectors.size()), static_cast<int>(monos.size()));
    for (size_t r = 0; r < vectors.size(); ++r) {
        auto row = coords(vectors[r], monos);
        for (size_t c = 0; c < row.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = row[c];
    }
    RrefResult rr = rref(m, combos != nullptr);
    int nrows = static_cast<int>(rr.pivot_cols.size());
    // Echelon rows come out with decreasing leading monomials (coordinates
    // are sorted largest-first); store them reversed so leading monomials
    // strictly increase.
    for (int r = nrows - 1; r >= 0; --r) {
        std::vector<GaussianRational> row(monos.size());
        for (size_t c = 0; c < monos.size(); ++c) row[c] = rr.mat.at(r, static_cast<int>(c));
        s.basis_.push_back(from_coords(row, n, monos));
    }
    if (combos) {
        ExactMatrix cm(nrows, static_cast<int>(vectors.size()));
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < static_cast<int>(vectors.size()); ++c)
                cm.at(nrows - 1 - r, c) = rr.transform->at(r, c);
        *combos = std::move(cm);
    }
    return s;
}

void GradedSubspace::check_compatible(const GradedSubspace& other) const {
    if (n_ != other.n_ || max_degree_ != other.max_degree_ || !(order_ == other.order_))
        throw std::invalid_argument("mismatched truncation parameters");
}

Polynomial GradedSubspace::reduce(const Polynomial& p) const {
    if (p.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
    Polynomial rem = p;
    // Basis is reduced echelon, so one pass from the largest pivot down
    // eliminates every pivot monomial.
    for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
        Monomial lead = it->leading_monomial(order_);
        GaussianRational c = rem.coeff(lead);
        if (!c.is_zero()) rem -= it->scaled(c);
    }
    return rem;
}

std::optional<std::vector<GaussianRational>> GradedSubspace::express(const Polynomial& p) const {
    if (p.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<GaussianRational> coords(basis_.size());
    Polynomial rem = p;
    for (size_t j = basis_.size(); j-- > 0;) {
        Monomial lead = basis_[j].leading_monomial(order_);
        GaussianRational c = rem.coeff(lead);
        if (!c.is_zero()) {
            coords[j] = c;
            rem -= basis_[j].scaled(c);
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return coords;
}

bool GradedSubspace::contains(const Polynomial& p) const {
    if (p.degree() > max_degree_) return false;
    return reduce(p).is_zero();
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    check_compatible(other);
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

bool GradedSubspace::equals(const GradedSubspace& other) const {
    check_compatible(other);
    return basis_ == other.basis_;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& other) const {
    check_compatible(other);
    std::vector<Polynomial> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return from_vectors(all, n_, max_degree_, order_);
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& other) const {
    check_compatible(other);
    if (dim() == 0 || other.dim() == 0) return GradedSubspace(n_, max_degree_, order_);
    auto monos = monomials_up_to(n_, max_degree_, order_);
    int na = dim(), nb = other.dim();
    // Columns [a_1 .. a_na | -b_1 .. -b_nb]; kernel vectors (alpha, beta)
    // give the common elements sum_i alpha_i a_i.
    ExactMatrix m(static_cast<int>(monos.size()), na + nb);
    for (int j = 0; j < na; ++j) {
        auto col = coords(basis_[j], monos);
        for (size_t r = 0; r < col.size(); ++r) m.at(static_cast<int>(r), j) = col[r];
    }
    for (int j = 0; j < nb; ++j) {
        auto col = coords(other.basis_[j], monos);
        for (size_t r = 0; r < col.size(); ++r) m.at(static_cast<int>(r), na + j) = -col[r];
    }
    ExactMatrix kb = kernel_basis(m);
    std::vector<Polynomial> gens;
    for (int k = 0; k < kb.cols(); ++k) {
        Polynomial v(n_);
        for (int j = 0; j < na; ++j)
            if (!kb.at(j, k).is_zero()) v += basis_[j].scaled(kb.at(j, k));
        gens.push_back(std::move(v));
    }
    return from_vectors(gens, n_, max_degree_, order_);
}

}  // namespace gkmod
