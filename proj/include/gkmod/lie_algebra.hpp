#pragma once

#include "gkmod/exact_matrix.hpp"
#include "gkmod/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkmod {

// Elements of the matrix Lie algebra and its complexification are n x n
// matrices over Q(i); real basis elements simply have zero imaginary parts.
using LieElement = ExactMatrix;

// A group element with its exact inverse; the engine never exponentiates.
// Rational points of G near the identity (Pythagorean rotations, triangular
// unipotents, diagonal tori) are enough for every check performed here.
struct GroupElement {
    ExactMatrix mat;
    ExactMatrix inv;

    GroupElement() = default;
    explicit GroupElement(ExactMatrix m) : mat(std::move(m)), inv(mat.inverse()) {}
    GroupElement(ExactMatrix m, ExactMatrix given_inverse);

    int dim() const { return mat.rows(); }
};

// Ad(g) X = g X g^{-1}.
LieElement ad_action(const GroupElement& g, const LieElement& x);

// Matrix Lie algebra with optional torus / Cartan / root data. Closure
// under bracket is verified at construction and structure constants are
// retained.
class LieAlgebra {
public:
    LieAlgebra(int ambient_dim, std::vector<LieElement> basis,
               std::optional<LieElement> k_generator = std::nullopt,
               std::vector<LieElement> cartan = {}, std::vector<LieElement> pos_root_vectors = {},
               std::vector<LieElement> neg_root_vectors = {});

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<LieElement>& basis() const { return basis_; }

    bool has_k_generator() const { return k_gen_.has_value(); }
    const LieElement& k_generator() const;

    const std::vector<LieElement>& cartan() const { return cartan_; }
    const std::vector<LieElement>& pos_root_vectors() const { return pos_roots_; }
    const std::vector<LieElement>& neg_root_vectors() const { return neg_roots_; }

    // c[i][j][k]: [a_i, a_j] = sum_k c[i][j][k] a_k.
    const std::vector<std::vector<std::vector<GaussianRational>>>& structure_constants() const {
        return structure_;
    }

    // Coordinates of an arbitrary element in the stored basis (exact);
    // throws when the element is outside the span.
    std::vector<GaussianRational> coordinates(const LieElement& x) const;

private:
    int n_;
    std::vector<LieElement> basis_;
    std::optional<LieElement> k_gen_;
    std::vector<LieElement> cartan_;
    std::vector<LieElement> pos_roots_;
    std::vector<LieElement> neg_roots_;
    std::vector<std::vector<std::vector<GaussianRational>>> structure_;
    ExactMatrix flat_basis_;  // columns = flattened basis matrices, for coordinate solves
};

// Transports a Lie algebra acting on R^n to d x d matrices acting on the
// coordinates of g itself: the frame lists the matrices identified with
// the coordinate directions of R^d, and the embedded element of Y sends
// coordinates of F to coordinates of [Y, F].
LieElement adjoint_embed_element(const LieElement& y, const std::vector<LieElement>& frame);
LieAlgebra adjoint_embedding(const LieAlgebra& lie, const std::vector<LieElement>& frame);

// Same transport for a group element: coordinates of F -> coordinates of
// g F g^{-1}. Produces exact torus rotations for the adjoint preset.
GroupElement adjoint_embed_group(const GroupElement& g, const std::vector<LieElement>& frame);

// ---- Presets ------------------------------------------------------------

// sl(2,R) acting on R^2 by matrices; K = SO(2).
// Basis a1 = [[0,1],[0,0]], a2 = [[0,0],[1,0]], a3 = diag(1,-1);
// H = a1 - a2 generates K; X± = a1 + a2 ∓ i a3 span the root spaces.
LieAlgebra sl2_standard();

// The same sl(2,R) transported to R^3 through the adjoint action, using
// the frame e1 -> a1+a2, e2 -> a3, e3 -> a1-a2.
LieAlgebra sl2_adjoint();
const std::vector<LieElement>& sl2_adjoint_frame();

// Invariant of the adjoint action: det of the frame matrix, -m1^2-m2^2+m3^2.
Polynomial sl2_adjoint_invariant();

// Named elements ("a1", "H", "X+", ...) resolved against a preset.
LieElement preset_named_element(const std::string& preset, const std::string& name);

// Exact rotation in the preset's K from a rational point (c, s) on the
// unit circle, c^2 + s^2 = 1.
GroupElement preset_torus_element(const std::string& preset, const Rational& c, const Rational& s);

}  // namespace gkmod
