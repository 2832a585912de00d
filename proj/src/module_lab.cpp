#include "gkmod/module_lab.hpp"

#include "gkmod/poly_span.hpp"

#include <stdexcept>

namespace gkmod {

GradedSubspace k_cyclic_span(const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                             int max_degree) {
    Polynomial pn = v.normal_form(p);
    if (pn.degree() > max_degree) throw std::invalid_argument("seed exceeds the degree bound");
    std::vector<Polynomial> comps;
    for (auto& [idx, comp] : isotypic_components(pn, lie, v)) comps.push_back(comp);
    return GradedSubspace::from_vectors(comps, v.ambient_dim(), max_degree, v.order());
}

namespace {

const std::vector<LieElement>& generator_matrices(GeneratorSet set, const LieAlgebra& lie) {
    switch (set) {
        case GeneratorSet::full_basis:
            return lie.basis();
        case GeneratorSet::pos_roots:
            if (lie.pos_root_vectors().empty())
                throw std::invalid_argument("no positive root vectors configured");
            return lie.pos_root_vectors();
        case GeneratorSet::neg_roots:
            if (lie.neg_root_vectors().empty())
                throw std::invalid_argument("no negative root vectors configured");
            return lie.neg_root_vectors();
    }
    throw std::logic_error("unreachable");
}

SubmoduleHandle generate_core(const Polynomial& seed, const std::vector<Polynomial>& starts,
                              const std::vector<LieElement>& ops, OpTag tag, const Variety& v,
                              int max_degree, GenerationLimits limits) {
    SubmoduleHandle h;
    h.seed = seed;
    h.max_degree = max_degree;
    h.limits = limits;
    h.space = GradedSubspace(v.ambient_dim(), max_degree, v.order());

    const bool track_exact = v.has_ideal();
    const int full_dim = static_cast<int>(v.nf_monomials_up_to(max_degree).size());

    PolySpan trunc_span(v.order());
    PolySpan exact_span(v.order());
    std::vector<SubmoduleHandle::Generator> frontier;

    for (const Polynomial& s0 : starts) {
        Polynomial s = v.normal_form(s0);
        if (s.is_zero()) continue;
        if (s.degree() > max_degree) throw std::invalid_argument("seed exceeds the degree bound");
        h.starts.push_back(s);
        SubmoduleHandle::Generator g;
        g.start_index = static_cast<int>(h.starts.size()) - 1;
        g.word = OperatorWord::identity();
        g.truncated = s;
        if (track_exact) g.exact = s;
        if (trunc_span.insert(s)) h.generators.push_back(g);
        if (track_exact) exact_span.insert(s);
        frontier.push_back(std::move(g));
    }

    int quiet = 0;
    while (!frontier.empty() && quiet < limits.l_stab && h.rounds < limits.l_max &&
           trunc_span.dim() < full_dim) {
        std::vector<SubmoduleHandle::Generator> next;
        bool grew = false;
        for (const auto& rec : frontier) {
            for (const auto& x : ops) {
                ++h.words_applied;
                SubmoduleHandle::Generator g;
                g.start_index = rec.start_index;
                g.word = rec.word.then(x, tag);
                if (track_exact) {
                    Polynomial img = tag == OpTag::dpi_prime ? apply_dpi_prime(x, *rec.exact, v)
                                                             : apply_drho(x, *rec.exact, v);
                    if (img.is_zero()) continue;
                    g.exact = img;
                    g.truncated = img.truncated(max_degree);
                    bool exact_new = exact_span.insert(img);
                    if (!g.truncated.is_zero() && trunc_span.insert(g.truncated)) {
                        h.generators.push_back(g);
                        grew = true;
                    }
                    // New exact directions must keep expanding even when
                    // their truncations add nothing: reduction can drop
                    // later children back under the bound.
                    if (exact_new) next.push_back(std::move(g));
                } else {
                    Polynomial img = tag == OpTag::dpi_prime ? apply_dpi_prime(x, rec.truncated, v)
                                                             : apply_drho(x, rec.truncated, v);
                    g.truncated = img.truncated(max_degree);
                    if (g.truncated.is_zero()) continue;
                    // On R^n the truncated step factors through truncation,
                    // so only truncation-new vectors can breed new ones.
                    if (trunc_span.insert(g.truncated)) {
                        h.generators.push_back(g);
                        next.push_back(std::move(g));
                        grew = true;
                    }
                }
            }
        }
        ++h.rounds;
        quiet = grew ? 0 : quiet + 1;
        frontier = std::move(next);
    }
    h.stabilized = frontier.empty() || quiet >= limits.l_stab || trunc_span.dim() == full_dim;

    std::vector<Polynomial> raw;
    raw.reserve(h.generators.size());
    for (const auto& g : h.generators) raw.push_back(g.truncated);
    h.space = GradedSubspace::from_vectors_with_combos(raw, v.ambient_dim(), max_degree, v.order(),
                                                       &h.basis_combos);
    return h;
}

}  // namespace

SubmoduleHandle generate_submodule(const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                                   int max_degree, GenerationLimits limits) {
    Polynomial pn = v.normal_form(p);
    if (pn.degree() > max_degree) throw std::invalid_argument("seed exceeds the degree bound");
    std::vector<Polynomial> starts;
    for (auto& [idx, comp] : isotypic_components(pn, lie, v)) starts.push_back(comp);
    return generate_core(pn, starts, lie.basis(), OpTag::dpi_prime, v, max_degree, limits);
}

SubmoduleHandle generate_cyclic(const std::vector<Polynomial>& starts, GeneratorSet gens,
                                const LieAlgebra& lie, const Variety& v, int max_degree,
                                GenerationLimits limits) {
    Polynomial seed = starts.empty() ? Polynomial::zero(v.ambient_dim()) : starts.front();
    return generate_core(seed, starts, generator_matrices(gens, lie), OpTag::dpi_prime, v,
                         max_degree, limits);
}

GradedSubspace generate_drho_module(const Polynomial& p, const LieAlgebra& lie, const Variety& v) {
    if (v.has_ideal())
        throw std::invalid_argument("drho-module generation is defined on the affine space only");
    Polynomial pn = p;
    if (!pn.is_homogeneous())
        throw std::invalid_argument("drho-module generation needs a homogeneous seed");
    int d = std::max(pn.degree(), 0);
    // drho preserves degree, so closure is exact; one quiet round means done.
    GenerationLimits limits{256, 1};
    SubmoduleHandle h = generate_core(pn, {pn}, lie.basis(), OpTag::drho, v, d, limits);
    if (!h.stabilized) throw std::logic_error("degree-preserving closure failed to terminate");
    return h.space;
}

Polynomial replay_basis_vector(const SubmoduleHandle& h, const Variety& v, int row) {
    if (row < 0 || row >= h.space.dim()) throw std::out_of_range("basis row out of range");
    Polynomial acc(v.ambient_dim());
    for (int j = 0; j < static_cast<int>(h.generators.size()); ++j) {
        const GaussianRational& c = h.basis_combos.at(row, j);
        if (c.is_zero()) continue;
        const auto& g = h.generators[j];
        Polynomial img = apply_word(g.word, h.starts[g.start_index], v);
        acc += img.truncated(h.max_degree).scaled(c);
    }
    return acc;
}

ReducingChain build_reducing_chain(const Polynomial& p, const std::vector<LieElement>& ops,
                                   const LieAlgebra& lie, const Variety& v, int max_degree,
                                   GenerationLimits limits) {
    ReducingChain chain;
    Polynomial cur = v.normal_form(p);
    chain.seeds.push_back(cur);
    for (const auto& x : ops) {
        cur = apply_dpi_prime(x, cur, v);
        if (cur.degree() > max_degree)
            throw std::invalid_argument("chained seed exceeds the degree bound; raise D");
        chain.seeds.push_back(cur);
    }
    for (const auto& s : chain.seeds)
        chain.handles.push_back(generate_submodule(s, lie, v, max_degree, limits));
    for (size_t i = 0; i + 1 < chain.handles.size(); ++i) {
        bool ok = chain.handles[i].space.contains(chain.handles[i + 1].space);
        chain.inclusion_ok.push_back(ok);
        if (!ok && !v.has_ideal() && chain.handles[i].stabilized && chain.handles[i + 1].stabilized)
            throw std::logic_error("reducing chain inclusion violated between stabilized models");
    }
    return chain;
}

std::map<int, int> subquotient_isotypic_dims(const SubmoduleHandle& a, const SubmoduleHandle& b,
                                             const LieAlgebra& lie, const Variety& v) {
    if (!a.stabilized || !b.stabilized)
        throw std::invalid_argument("subquotient dimensions need stabilized models");
    if (!a.space.contains(b.space)) throw std::invalid_argument("non-nested inputs");
    auto da = isotypic_decompose(a.space, lie, v);
    auto db = isotypic_decompose(b.space, lie, v);
    std::map<int, int> out;
    for (const auto& [idx, part] : da) {
        int sub = 0;
        auto it = db.find(idx);
        if (it != db.end()) sub = it->second.dim();
        out[idx] = part.dim() - sub;
    }
    return out;
}

namespace {

std::string weight_key(const std::vector<GaussianRational>& w) {
    std::string out = "(";
    for (size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + w[k].to_string();
    return out + ")";
}

// Joint eigensplit of the truncated dpi'(cartan) action restricted to a
// subspace; integer-i eigenvalue candidates per Cartan element, refined
// sequentially. Reports dimensions per weight tuple.
std::map<std::string, int> weight_dims_of_subspace(const GradedSubspace& s, const LieAlgebra& lie,
                                                   const Variety& v) {
    std::map<std::string, int> out;
    if (s.dim() == 0) return out;
    struct Piece {
        std::vector<GaussianRational> weight;
        std::vector<Polynomial> basis;
    };
    std::vector<Piece> pieces{{{}, s.basis()}};
    for (const auto& hmat : lie.cartan()) {
        std::vector<Piece> next;
        for (auto& piece : pieces) {
            const int dim = static_cast<int>(piece.basis.size());
            GradedSubspace sub = GradedSubspace::from_vectors(piece.basis, s.ambient_dim(),
                                                              s.max_degree(), s.order());
            ExactMatrix restricted(dim, dim);
            for (int j = 0; j < dim; ++j) {
                Polynomial img = apply_dpi_prime(hmat, sub.basis()[j], v).truncated(s.max_degree());
                auto coords = sub.express(img);
                if (!coords)
                    throw std::domain_error(
                        "subspace is not invariant under the Cartan action at truncation");
                for (int r = 0; r < dim; ++r) restricted.at(r, j) = (*coords)[r];
            }
            // Scan integer-i candidates.
            double norm_bound = 0.0;
            for (int r = 0; r < dim; ++r) {
                double row = 0.0;
                for (int c = 0; c < dim; ++c) row += restricted.at(r, c).abs_upper();
                norm_bound = std::max(norm_bound, row);
            }
            int bound = static_cast<int>(norm_bound) + 1;
            int found = 0;
            for (int n = -bound; n <= bound && found < dim; ++n) {
                ExactMatrix shifted = restricted;
                GaussianRational ev(Rational(0), Rational(n));
                for (int r = 0; r < dim; ++r) shifted.at(r, r) -= ev;
                ExactMatrix kb = kernel_basis(shifted);
                if (kb.cols() == 0) continue;
                Piece refined;
                refined.weight = piece.weight;
                refined.weight.push_back(ev);
                for (int c = 0; c < kb.cols(); ++c) {
                    Polynomial vpoly(s.ambient_dim());
                    for (int r = 0; r < dim; ++r)
                        if (!kb.at(r, c).is_zero()) vpoly += sub.basis()[r].scaled(kb.at(r, c));
                    refined.basis.push_back(std::move(vpoly));
                }
                found += kb.cols();
                next.push_back(std::move(refined));
            }
            if (found != dim)
                throw std::domain_error(
                    "Cartan element does not act semisimply with integer-i eigenvalues on this "
                    "subspace");
        }
        pieces = std::move(next);
    }
    for (const auto& piece : pieces) out[weight_key(piece.weight)] += static_cast<int>(piece.basis.size());
    return out;
}

// Exact element of the generated module whose truncation is the given
// member of the model space.
Polynomial exact_carrier(const SubmoduleHandle& h, const Variety& v, const Polynomial& member) {
    auto coords = h.space.express(member);
    if (!coords) throw std::invalid_argument("polynomial is not in the model space");
    Polynomial acc(v.ambient_dim());
    for (int r = 0; r < h.space.dim(); ++r) {
        if ((*coords)[r].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(h.generators.size()); ++j) {
            GaussianRational c = (*coords)[r] * h.basis_combos.at(r, j);
            if (c.is_zero()) continue;
            const auto& g = h.generators[j];
            acc += (v.has_ideal() ? *g.exact : g.truncated).scaled(c);
        }
    }
    return acc;
}

}  // namespace

HighestWeightReport highest_weight_check(const Polynomial& p, const LieAlgebra& lie,
                                         const Variety& v, int max_degree,
                                         const std::optional<WordSum>& casimir,
                                         GenerationLimits limits) {
    if (lie.cartan().empty() || lie.pos_root_vectors().empty() || lie.neg_root_vectors().empty())
        throw std::invalid_argument("highest-weight analysis needs Cartan and root data");
    Polynomial pn = v.normal_form(p);
    auto weight = weight_of(pn, lie, v);
    if (!weight) throw std::invalid_argument("seed is not a weight vector of the Cartan action");

    HighestWeightReport rep;
    rep.weight = *weight;

    SubmoduleHandle vp = generate_cyclic({pn}, GeneratorSet::full_basis, lie, v, max_degree, limits);
    std::vector<Polynomial> nplus_images;
    for (const auto& x : lie.pos_root_vectors()) {
        Polynomial img = apply_dpi_prime(x, pn, v);
        if (!img.is_zero()) nplus_images.push_back(img);
    }
    SubmoduleHandle vnp =
        generate_cyclic(nplus_images, GeneratorSet::full_basis, lie, v, max_degree, limits);
    SubmoduleHandle nminus = generate_cyclic({pn}, GeneratorSet::neg_roots, lie, v, max_degree, limits);

    rep.vp_stabilized = vp.stabilized;
    rep.vnp_stabilized = vnp.stabilized;
    rep.nminus_stabilized = nminus.stabilized;
    rep.vp_dim = vp.space.dim();
    rep.vnp_dim = vnp.space.dim();

    rep.nplus_images_in_vnp = true;
    for (const auto& img : nplus_images)
        if (!vnp.space.contains(img.truncated(max_degree))) rep.nplus_images_in_vnp = false;

    rep.nminus_span_property = nminus.space.sum(vnp.space).equals(vp.space);

    auto vp_weights = weight_dims_of_subspace(vp.space, lie, v);
    auto vnp_weights = weight_dims_of_subspace(vnp.space, lie, v);
    for (const auto& [key, dim] : vp_weights) {
        int sub = 0;
        auto it = vnp_weights.find(key);
        if (it != vnp_weights.end()) sub = it->second;
        if (dim - sub != 0) rep.quotient_weight_dims[key] = dim - sub;
    }

    if (casimir) {
        rep.casimir_checked = true;
        // Complement representatives of Vnp inside Vp.
        PolySpan vnp_span(v.order());
        for (const auto& b : vnp.space.basis()) vnp_span.insert(b);
        std::vector<Polynomial> reps;
        for (const auto& b : vp.space.basis()) {
            Polynomial r = vnp_span.reduce(b);
            if (!r.is_zero()) {
                vnp_span.insert(r);
                reps.push_back(std::move(r));
            }
        }
        const int q = static_cast<int>(reps.size());
        rep.casimir_scalar = true;
        if (q > 0) {
            auto monos = GradedSubspace::monomials_up_to(v.ambient_dim(), max_degree, v.order());
            ExactMatrix basis_mat(static_cast<int>(monos.size()), q);
            for (int j = 0; j < q; ++j) {
                auto col = GradedSubspace::coords(reps[j], monos);
                for (size_t r = 0; r < col.size(); ++r) basis_mat.at(static_cast<int>(r), j) = col[r];
            }
            PolySpan vnp_only(v.order());
            for (const auto& b : vnp.space.basis()) vnp_only.insert(b);

            ExactMatrix action(q, q);
            bool consistent = true;
            for (int j = 0; j < q && consistent; ++j) {
                Polynomial carrier = exact_carrier(vp, v, reps[j]);
                Polynomial img = apply_word_sum(*casimir, carrier, v).truncated(max_degree);
                Polynomial cls = vnp_only.reduce(img);
                auto coords = solve(basis_mat, GradedSubspace::coords(cls, monos));
                if (!coords) {
                    consistent = false;
                    break;
                }
                // Verify the solve exactly (basis_mat has full column rank,
                // but the class must lie in the span of the representatives).
                std::vector<GaussianRational> back(monos.size());
                for (int jj = 0; jj < q; ++jj)
                    for (size_t r = 0; r < monos.size(); ++r)
                        back[r] += basis_mat.at(static_cast<int>(r), jj) * (*coords)[jj];
                if (GradedSubspace::from_coords(back, v.ambient_dim(), monos) != cls) {
                    consistent = false;
                    break;
                }
                for (int r = 0; r < q; ++r) action.at(r, j) = (*coords)[r];
            }
            if (!consistent) {
                rep.casimir_scalar = false;
            } else {
                GaussianRational scalar = action.at(0, 0);
                for (int r = 0; r < q && rep.casimir_scalar; ++r)
                    for (int c = 0; c < q; ++c) {
                        const GaussianRational& val = action.at(r, c);
                        if (r == c ? !(val == scalar) : !val.is_zero()) {
                            rep.casimir_scalar = false;
                            break;
                        }
                    }
                if (rep.casimir_scalar) rep.casimir_value = scalar;
            }
        }
    }
    return rep;
}

DirectSumReport direct_sum_check(const std::vector<SubmoduleHandle>& handles,
                                 const GradedSubspace& target) {
    DirectSumReport rep;
    rep.target_dim = target.dim();
    rep.all_stabilized = true;
    for (const auto& h : handles) {
        if (h.space.ambient_dim() != target.ambient_dim() ||
            h.space.max_degree() != target.max_degree() || !(h.space.order() == target.order()))
            throw std::invalid_argument("mixed truncation parameters");
        rep.dims.push_back(h.space.dim());
        rep.dim_sum += h.space.dim();
        rep.all_stabilized = rep.all_stabilized && h.stabilized;
    }
    rep.pairwise_trivial = true;
    rep.pairwise_intersections.resize(handles.size());
    for (size_t a = 0; a < handles.size(); ++a) {
        for (size_t b = a + 1; b < handles.size(); ++b) {
            int d = handles[a].space.intersect(handles[b].space).dim();
            rep.pairwise_intersections[a].push_back(d);
            if (d != 0) rep.pairwise_trivial = false;
        }
    }
    GradedSubspace total(target.ambient_dim(), target.max_degree(), target.order());
    for (const auto& h : handles) total = total.sum(h.space);
    rep.spanning = total.equals(target);
    return rep;
}

}  // namespace gkmod
