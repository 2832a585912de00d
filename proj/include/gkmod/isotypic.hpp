#pragma once

#include "gkmod/graded_subspace.hpp"
#include "gkmod/lie_algebra.hpp"
#include "gkmod/rep_ops.hpp"
#include "gkmod/variety.hpp"

#include <map>

namespace gkmod {

// K here is the one-parameter torus generated by lie.k_generator(); its
// character of index n acts by exp(i n theta), so the isotypic component
// of index n is the exact eigenspace of drho(k_gen) for eigenvalue i*n.
// All splits are exact over Q(i); if the generator fails to act
// semisimply on some truncation (impossible for the presets) the
// decomposition reports the defect instead of silently projecting.

// Throws unless a torus generator is present and r^2 is K-invariant
// (drho(k_gen) r^2 = 0).
void require_torus(const LieAlgebra& lie, const Variety& v);

// Nonzero isotypic components of p, indexed by character. Their sum is
// verified to reproduce p exactly.
std::map<int, Polynomial> isotypic_components(const Polynomial& p, const LieAlgebra& lie,
                                              const Variety& v);

// Component of p on the index-n eigenspace within degree <= D.
Polynomial isotypic_project(int n, const Polynomial& p, const LieAlgebra& lie, const Variety& v,
                            int max_degree);

// Exact eigensplit of a drho(k_gen)-invariant subspace; the direct sum of
// the parts is verified to equal S.
std::map<int, GradedSubspace> isotypic_decompose(const GradedSubspace& s, const LieAlgebra& lie,
                                                 const Variety& v);

// Joint exact kernel of (dpi'(H_i) - lambda_i) on the degree-<=D
// truncation, over the stored Cartan basis.
GradedSubspace weight_space(const std::vector<GaussianRational>& lambda_values,
                            const LieAlgebra& lie, const Variety& v, int max_degree);

// If p is a joint eigenvector of dpi'(cartan), its weight values.
std::optional<std::vector<GaussianRational>> weight_of(const Polynomial& p, const LieAlgebra& lie,
                                                       const Variety& v);

// Exact projector identities on the full degree-<=D truncation:
// P(n)^2 = P(n), P(n)P(m) = 0 for n != m, and sum over the given indices
// equals the identity (false when an occurring index is omitted).
bool projector_identities_check(const std::vector<int>& indices, int max_degree,
                                const LieAlgebra& lie, const Variety& v);

// Occurring character indices with multiplicities on the degree-<=D
// truncation (the per-index dimensions).
std::map<int, int> isotypic_dimensions(const LieAlgebra& lie, const Variety& v, int max_degree);

}  // namespace gkmod
