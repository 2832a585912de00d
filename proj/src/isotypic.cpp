#include "gkmod/isotypic.hpp"

#include <cmath>
#include <stdexcept>

namespace gkmod {

void require_torus(const LieAlgebra& lie, const Variety& v) {
    if (!lie.has_k_generator()) throw std::invalid_argument("no torus generator configured");
    if (!drho_of_r2(lie.k_generator(), v).is_zero())
        throw std::invalid_argument("r^2 is not invariant under the torus generator");
}

namespace {

// Eigenvalue magnitudes are bounded by any operator norm; the max row sum
// of |entries| caps the integer candidates to scan.
int candidate_bound(const ExactMatrix& a) {
    double bound = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        double row = 0.0;
        for (int c = 0; c < a.cols(); ++c) row += a.at(r, c).abs_upper();
        bound = std::max(bound, row);
    }
    return static_cast<int>(std::ceil(bound)) + 1;
}

struct TorusSplit {
    std::vector<int> indices;
    std::vector<ExactMatrix> kernels;  // columns = eigenbasis per index
    int total_dim = 0;
};

// Exact eigensplit of a for eigenvalues i*n, n integer.
TorusSplit eigensplit(const ExactMatrix& a) {
    TorusSplit split;
    const int dim = a.rows();
    if (dim == 0) return split;
    int bound = candidate_bound(a);
    for (int n = -bound; n <= bound && split.total_dim < dim; ++n) {
        ExactMatrix shifted = a;
        GaussianRational ev(Rational(0), Rational(n));
        for (int r = 0; r < dim; ++r) shifted.at(r, r) -= ev;
        ExactMatrix kb = kernel_basis(shifted);
        if (kb.cols() == 0) continue;
        split.indices.push_back(n);
        split.total_dim += kb.cols();
        split.kernels.push_back(std::move(kb));
    }
    if (split.total_dim != dim)
        throw std::domain_error(
            "torus generator does not act semisimply with integer character indices on this "
            "truncation (decomposition defect: " +
            std::to_string(split.total_dim) + " of " + std::to_string(dim) + " dimensions found)");
    return split;
}

ExactMatrix k_gen_matrix(const LieAlgebra& lie, const Variety& v, int max_degree) {
    const LieElement& k = lie.k_generator();
    return operator_matrix([&](const Polynomial& p) { return apply_drho(k, p, v); }, max_degree, v);
}

}  // namespace

std::map<int, Polynomial> isotypic_components(const Polynomial& p, const LieAlgebra& lie,
                                              const Variety& v) {
    require_torus(lie, v);
    std::map<int, Polynomial> out;
    Polynomial pn = v.normal_form(p);
    if (pn.is_zero()) return out;
    const int d = pn.degree();
    auto monos = v.nf_monomials_up_to(d);
    TorusSplit split = eigensplit(k_gen_matrix(lie, v, d));

    // Solve [K_1 | K_2 | ...] x = coords(p); blocks of x give the pieces.
    const int total = static_cast<int>(monos.size());
    ExactMatrix u(total, split.total_dim);
    int col = 0;
    for (const auto& kb : split.kernels) {
        for (int c = 0; c < kb.cols(); ++c, ++col)
            for (int r = 0; r < total; ++r) u.at(r, col) = kb.at(r, c);
    }
    auto rhs = GradedSubspace::coords(pn, monos);
    auto x = solve(u, rhs);
    if (!x) throw std::domain_error("isotypic solve failed (decomposition defect)");

    col = 0;
    Polynomial check(v.ambient_dim());
    for (size_t block = 0; block < split.kernels.size(); ++block) {
        const auto& kb = split.kernels[block];
        std::vector<GaussianRational> comp(total);
        for (int c = 0; c < kb.cols(); ++c, ++col) {
            if ((*x)[col].is_zero()) continue;
            for (int r = 0; r < total; ++r) comp[r] += kb.at(r, c) * (*x)[col];
        }
        Polynomial piece = GradedSubspace::from_coords(comp, v.ambient_dim(), monos);
        if (!piece.is_zero()) {
            check += piece;
            out.emplace(split.indices[block], std::move(piece));
        }
    }
    if (check != pn) throw std::domain_error("isotypic components do not sum back to the input");
    return out;
}

Polynomial isotypic_project(int n, const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                            int max_degree) {
    Polynomial pn = v.normal_form(p);
    if (pn.degree() > max_degree) throw std::invalid_argument("polynomial exceeds the degree bound");
    auto comps = isotypic_components(pn, lie, v);
    auto it = comps.find(n);
    return it == comps.end() ? Polynomial::zero(v.ambient_dim()) : it->second;
}

std::map<int, GradedSubspace> isotypic_decompose(const GradedSubspace& s, const LieAlgebra& lie,
                                                 const Variety& v) {
    require_torus(lie, v);
    std::map<int, GradedSubspace> out;
    if (s.dim() == 0) return out;
    const LieElement& k = lie.k_generator();

    // Restrict drho(k_gen) to S; membership of every image is the
    // invariance precondition.
    const int dim = s.dim();
    ExactMatrix restricted(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Polynomial img = apply_drho(k, s.basis()[j], v);
        auto coords = s.express(img);
        if (!coords)
            throw std::invalid_argument("subspace is not invariant under the torus generator");
        for (int r = 0; r < dim; ++r) restricted.at(r, j) = (*coords)[r];
    }
    TorusSplit split = eigensplit(restricted);
    for (size_t block = 0; block < split.kernels.size(); ++block) {
        const auto& kb = split.kernels[block];
        std::vector<Polynomial> gens;
        for (int c = 0; c < kb.cols(); ++c) {
            Polynomial piece(v.ambient_dim());
            for (int r = 0; r < dim; ++r)
                if (!kb.at(r, c).is_zero()) piece += s.basis()[r].scaled(kb.at(r, c));
            gens.push_back(std::move(piece));
        }
        out.emplace(split.indices[block],
                    GradedSubspace::from_vectors(gens, s.ambient_dim(), s.max_degree(), s.order()));
    }
    return out;
}

GradedSubspace weight_space(const std::vector<GaussianRational>& lambda_values,
                            const LieAlgebra& lie, const Variety& v, int max_degree) {
    const auto& cartan = lie.cartan();
    if (cartan.empty()) throw std::invalid_argument("no Cartan subalgebra configured");
    if (lambda_values.size() != cartan.size())
        throw std::invalid_argument("weight value count != Cartan basis size");

    auto monos = v.nf_monomials_up_to(max_degree);
    const int dim = static_cast<int>(monos.size());
    const int h = static_cast<int>(cartan.size());
    ExactMatrix stacked(dim * h, dim);
    for (int hi = 0; hi < h; ++hi) {
        ExactMatrix m = operator_matrix(
            [&](const Polynomial& p) {
                return apply_dpi_prime(cartan[hi], p, v).truncated(max_degree);
            },
            max_degree, v);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                GaussianRational val = m.at(r, c);
                if (r == c) val -= lambda_values[hi];
                stacked.at(hi * dim + r, c) = val;
            }
        }
    }
    ExactMatrix kb = kernel_basis(stacked);
    std::vector<Polynomial> gens;
    for (int c = 0; c < kb.cols(); ++c) {
        std::vector<GaussianRational> col(dim);
        for (int r = 0; r < dim; ++r) col[r] = kb.at(r, c);
        gens.push_back(GradedSubspace::from_coords(col, v.ambient_dim(), monos));
    }
    return GradedSubspace::from_vectors(gens, v.ambient_dim(), max_degree, v.order());
}

std::optional<std::vector<GaussianRational>> weight_of(const Polynomial& p, const LieAlgebra& lie,
                                                       const Variety& v) {
    if (lie.cartan().empty()) throw std::invalid_argument("no Cartan subalgebra configured");
    Polynomial pn = v.normal_form(p);
    if (pn.is_zero()) return std::nullopt;
    std::vector<GaussianRational> values;
    Monomial lead = pn.leading_monomial(v.order());
    for (const auto& h : lie.cartan()) {
        Polynomial img = apply_dpi_prime(h, pn, v);
        GaussianRational lambda = img.coeff(lead) / pn.coeff(lead);
        if (img != pn.scaled(lambda)) return std::nullopt;
        values.push_back(lambda);
    }
    return values;
}

std::map<int, int> isotypic_dimensions(const LieAlgebra& lie, const Variety& v, int max_degree) {
    require_torus(lie, v);
    TorusSplit split = eigensplit(k_gen_matrix(lie, v, max_degree));
    std::map<int, int> dims;
    for (size_t b = 0; b < split.indices.size(); ++b) dims[split.indices[b]] = split.kernels[b].cols();
    return dims;
}

bool projector_identities_check(const std::vector<int>& indices, int max_degree,
                                const LieAlgebra& lie, const Variety& v) {
    require_torus(lie, v);
    TorusSplit split = eigensplit(k_gen_matrix(lie, v, max_degree));
    const int dim = split.total_dim;

    // Change of basis to the eigenbasis; projectors are U E_n U^{-1}.
    ExactMatrix u(dim, dim);
    int col = 0;
    std::map<int, std::pair<int, int>> block_of;  // index -> [first, count]
    for (size_t b = 0; b < split.kernels.size(); ++b) {
        const auto& kb = split.kernels[b];
        block_of[split.indices[b]] = {col, kb.cols()};
        for (int c = 0; c < kb.cols(); ++c, ++col)
            for (int r = 0; r < dim; ++r) u.at(r, col) = kb.at(r, c);
    }
    ExactMatrix uinv = u.inverse();

    auto projector = [&](int n) {
        ExactMatrix sel(dim, dim);
        auto it = block_of.find(n);
        if (it != block_of.end())
            for (int c = it->second.first; c < it->second.first + it->second.second; ++c)
                sel.at(c, c) = GaussianRational::one();
        return u * sel * uinv;
    };

    std::vector<ExactMatrix> projs;
    projs.reserve(indices.size());
    for (int n : indices) projs.push_back(projector(n));

    ExactMatrix sum(dim, dim);
    for (size_t a = 0; a < projs.size(); ++a) {
        if (!(projs[a] * projs[a] == projs[a])) return false;
        for (size_t b = a + 1; b < projs.size(); ++b) {
            if (indices[a] == indices[b]) continue;
            if (!(projs[a] * projs[b]).is_zero()) return false;
        }
        sum = sum + projs[a];
    }
    return sum == ExactMatrix::identity(dim);
}

}  // namespace gkmod
