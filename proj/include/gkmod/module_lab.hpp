#pragma once

#include "gkmod/graded_subspace.hpp"
#include "gkmod/isotypic.hpp"
#include "gkmod/lie_algebra.hpp"
#include "gkmod/rep_ops.hpp"
#include "gkmod/variety.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkmod {

// Truncated generation of cyclic submodules. The generated space is a
// "truncated inner model": the span of degree-<=D truncations of exact
// enveloping-algebra word images of the seed. Every basis vector carries a
// witness (a combination of words over the seed components) whose exact
// replay reproduces its degree-<=D part. On a quotient ring the generator
// tracks exact word images, because normal-form reduction can push high
// degrees back under the bound; on R^n the degree-{l, l+2} shift makes
// truncated iteration equivalent and cheaper.

struct GenerationLimits {
    int l_max = 25;   // hard cap on generation rounds
    int l_stab = 3;   // quiet rounds before declaring stabilization
};

struct SubmoduleHandle {
    Polynomial seed;
    int max_degree = 0;
    GenerationLimits limits;
    int rounds = 0;
    long words_applied = 0;
    bool stabilized = false;

    std::vector<Polynomial> starts;  // seed components the words act on

    struct Generator {
        int start_index = 0;
        OperatorWord word;
        Polynomial truncated;               // degree-<=D part of the word image
        std::optional<Polynomial> exact;    // full image (kept on quotient rings)
        Generator() : truncated(0) {}
    };
    std::vector<Generator> generators;  // raw vectors whose truncations span the space

    GradedSubspace space;
    // space.basis()[r] = sum_j basis_combos(r, j) * generators[j].truncated
    ExactMatrix basis_combos;

    SubmoduleHandle() : seed(0), space(0, 0, MonomialOrder::standard(0)) {}
};

// Span of the nonzero isotypic components of p: for a connected abelian K
// with K-invariant r^2 this equals the span of the K-orbit of p.
GradedSubspace k_cyclic_span(const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                             int max_degree);

// Truncated inner model of W_p = dpi(U(g_C)) Span{pi(K) p e^{-r^2}}:
// start from the K-span, apply every dpi'(basis element), discard degrees
// above D, close the span; stop after l_stab quiet rounds or at l_max.
SubmoduleHandle generate_submodule(const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                                   int max_degree, GenerationLimits limits = {});

// Same machinery for a plain cyclic module dpi(U(g_C)) p (no K-span) and
// for selectable generator sets; used by the highest-weight analysis.
enum class GeneratorSet { full_basis, pos_roots, neg_roots };
SubmoduleHandle generate_cyclic(const std::vector<Polynomial>& starts, GeneratorSet gens,
                                const LieAlgebra& lie, const Variety& v, int max_degree,
                                GenerationLimits limits = {});

// Exact closure of a homogeneous polynomial under drho (degree-preserving
// on R^n, so there is no truncation loss and dimensions are exact).
GradedSubspace generate_drho_module(const Polynomial& p, const LieAlgebra& lie, const Variety& v);

// Replays basis vector r of the handle from its witness words, without any
// intermediate truncation; equals the stored vector on the nose.
Polynomial replay_basis_vector(const SubmoduleHandle& h, const Variety& v, int row);

struct ReducingChain {
    std::vector<Polynomial> seeds;          // p, dpi'(X)p, dpi'(YX)p, ...
    std::vector<SubmoduleHandle> handles;
    std::vector<bool> inclusion_ok;         // handles[i+1].space <= handles[i].space
};

// Chain of truncated inner models along successive seeds. An inclusion
// violation between stabilized models on R^n is an internal-consistency
// failure and throws.
ReducingChain build_reducing_chain(const Polynomial& p, const std::vector<LieElement>& ops,
                                   const LieAlgebra& lie, const Variety& v, int max_degree,
                                   GenerationLimits limits = {});

// Per-character dimensions of A/B, exact: dim A(n) - dim B(n).
std::map<int, int> subquotient_isotypic_dims(const SubmoduleHandle& a, const SubmoduleHandle& b,
                                             const LieAlgebra& lie, const Variety& v);

struct HighestWeightReport {
    std::vector<GaussianRational> weight;
    bool nplus_images_in_vnp = false;
    bool nminus_span_property = false;
    std::map<std::string, int> quotient_weight_dims;
    bool vp_stabilized = false;
    bool vnp_stabilized = false;
    bool nminus_stabilized = false;
    bool casimir_checked = false;
    bool casimir_scalar = false;
    GaussianRational casimir_value;
    int vp_dim = 0;
    int vnp_dim = 0;
};

// Highest-weight analysis of the cyclic module of a weight vector p:
// (a) the weight of p, (b) dpi'(n^+) p lands in the n^+-generated
// submodule, (c) words in n^- plus that submodule span the whole model,
// (d) per-weight dimensions of the quotient, (e) optional scalar-action
// check of a user-supplied Casimir word on the quotient.
HighestWeightReport highest_weight_check(const Polynomial& p, const LieAlgebra& lie,
                                         const Variety& v, int max_degree,
                                         const std::optional<WordSum>& casimir = std::nullopt,
                                         GenerationLimits limits = {});

struct DirectSumReport {
    std::vector<int> dims;
    std::vector<std::vector<int>> pairwise_intersections;  // upper triangle, dims
    int dim_sum = 0;
    int target_dim = 0;
    bool pairwise_trivial = false;
    bool spanning = false;
    bool all_stabilized = false;
};

// Spanning/independence certificate for a family of inner models against a
// target truncation. The models only under-approximate, so joint spanning
// with matching dimension sum certifies directness at truncation level.
DirectSumReport direct_sum_check(const std::vector<SubmoduleHandle>& handles,
                                 const GradedSubspace& target);

}  // namespace gkmod
