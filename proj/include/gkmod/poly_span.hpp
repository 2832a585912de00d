#pragma once

#include "gkmod/polynomial.hpp"

#include <map>

namespace gkmod {

// Inter-reduced sparse echelon of polynomials without any degree bound,
// keyed by leading monomial. Used by the submodule generator to track the
// span of exact (untruncated) word images on quotient rings, where degrees
// grow round by round.
class PolySpan {
public:
    explicit PolySpan(MonomialOrder order) : order_(std::move(order)) {}

    // Fully reduces p against the stored rows.
    Polynomial reduce(const Polynomial& p) const {
        Polynomial rem = p;
        while (!rem.is_zero()) {
            // Largest monomial of rem that is some row's pivot.
            const Polynomial* row = nullptr;
            Monomial pivot;
            GaussianRational c;
            for (const auto& [m, coeff] : rem.terms()) {
                auto it = rows_.find(m);
                if (it != rows_.end() && (row == nullptr || order_.less(pivot, m))) {
                    row = &it->second;
                    pivot = m;
                    c = coeff;
                }
            }
            if (!row) break;
            rem -= row->scaled(c);
        }
        return rem;
    }

    // Inserts p if independent; returns false when p is already in the span.
    bool insert(const Polynomial& p) {
        Polynomial rem = reduce(p);
        if (rem.is_zero()) return false;
        Monomial lead = rem.leading_monomial(order_);
        rem = rem.scaled(rem.coeff(lead).inverse());
        // Back-reduce existing rows so the echelon stays inter-reduced.
        for (auto& [m, row] : rows_) {
            GaussianRational c = row.coeff(lead);
            if (!c.is_zero()) row -= rem.scaled(c);
        }
        rows_.emplace(lead, std::move(rem));
        return true;
    }

    bool member(const Polynomial& p) const { return reduce(p).is_zero(); }
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    MonomialOrder order_;
    std::map<Monomial, Polynomial> rows_;  // pivot monomial -> normalized row
};

}  // namespace gkmod
