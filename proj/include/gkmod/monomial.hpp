#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkmod {

// Exponent vector of length n (the ambient dimension).
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic order: total degree first, then lex on exponents
// read in variable-priority sequence. The priority permutation is
// configurable (a quotient ring ranks its eliminable variable highest);
// the order type itself is fixed engine-wide.
struct MonomialOrder {
    std::vector<int> priority;  // priority[0] = index of the highest-ranked variable

    static MonomialOrder standard(int n) {
        MonomialOrder o;
        o.priority.resize(n);
        for (int k = 0; k < n; ++k) o.priority[k] = k;
        return o;
    }

    static MonomialOrder ranked(std::vector<int> priority_vars) {
        MonomialOrder o;
        o.priority = std::move(priority_vars);
        std::vector<bool> seen(o.priority.size(), false);
        for (int v : o.priority) {
            if (v < 0 || v >= static_cast<int>(o.priority.size()) || seen[v])
                throw std::invalid_argument("variable ranking is not a permutation");
            seen[v] = true;
        }
        return o;
    }

    int n() const { return static_cast<int>(priority.size()); }

    // >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db ? -1 : 1;
        for (int v : priority) {
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const { return priority == o.priority; }
};

std::string monomial_to_string(const Monomial& m);

}  // namespace gkmod
