#include "gkmod/lie_algebra.hpp"

#include <stdexcept>

namespace gkmod {

GroupElement::GroupElement(ExactMatrix m, ExactMatrix given_inverse)
    : mat(std::move(m)), inv(std::move(given_inverse)) {
    if (!(mat * inv == ExactMatrix::identity(mat.rows())))
        throw std::invalid_argument("supplied inverse is not exact");
}

LieElement ad_action(const GroupElement& g, const LieElement& x) {
    return g.mat * x * g.inv;
}

namespace {

std::vector<GaussianRational> flatten(const ExactMatrix& m) {
    std::vector<GaussianRational> v;
    v.reserve(size_t(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

}  // namespace

LieAlgebra::LieAlgebra(int ambient_dim, std::vector<LieElement> basis,
                       std::optional<LieElement> k_generator, std::vector<LieElement> cartan,
                       std::vector<LieElement> pos_root_vectors,
                       std::vector<LieElement> neg_root_vectors)
    : n_(ambient_dim),
      basis_(std::move(basis)),
      k_gen_(std::move(k_generator)),
      cartan_(std::move(cartan)),
      pos_roots_(std::move(pos_root_vectors)),
      neg_roots_(std::move(neg_root_vectors)) {
    if (basis_.empty()) throw std::invalid_argument("empty Lie algebra basis");
    for (const auto& b : basis_)
        if (b.rows() != n_ || b.cols() != n_)
            throw std::invalid_argument("basis matrix size != ambient_dim");
    const int d = dim();

    flat_basis_ = ExactMatrix(n_ * n_, d);
    for (int j = 0; j < d; ++j) {
        auto col = flatten(basis_[j]);
        for (int r = 0; r < n_ * n_; ++r) flat_basis_.at(r, j) = col[r];
    }
    if (rank(flat_basis_) != d) throw std::invalid_argument("Lie algebra basis is linearly dependent");

    // Closure under bracket, with structure constants retained.
    structure_.assign(d, std::vector<std::vector<GaussianRational>>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            LieElement br = bracket(basis_[i], basis_[j]);
            auto coords = solve(flat_basis_, flatten(br));
            if (!coords) throw std::invalid_argument("basis is not closed under bracket");
            // Exactness check: the solve is consistent, but verify the span.
            LieElement rebuilt(n_, n_);
            for (int k = 0; k < d; ++k) rebuilt = rebuilt + basis_[k].scaled((*coords)[k]);
            if (!(rebuilt == br)) throw std::invalid_argument("basis is not closed under bracket");
            structure_[i][j] = std::move(*coords);
        }
    }

    for (size_t i = 0; i < cartan_.size(); ++i)
        for (size_t j = i + 1; j < cartan_.size(); ++j)
            if (!bracket(cartan_[i], cartan_[j]).is_zero())
                throw std::invalid_argument("Cartan elements do not commute");
}

const LieElement& LieAlgebra::k_generator() const {
    if (!k_gen_) throw std::logic_error("Lie algebra has no torus generator");
    return *k_gen_;
}

std::vector<GaussianRational> LieAlgebra::coordinates(const LieElement& x) const {
    auto coords = solve(flat_basis_, flatten(x));
    if (!coords) throw std::invalid_argument("element is outside the span of the basis");
    LieElement rebuilt(n_, n_);
    for (int k = 0; k < dim(); ++k) rebuilt = rebuilt + basis_[k].scaled((*coords)[k]);
    if (!(rebuilt == x)) throw std::invalid_argument("element is outside the span of the basis");
    return *coords;
}

LieElement adjoint_embed_element(const LieElement& y, const std::vector<LieElement>& frame) {
    const int d = static_cast<int>(frame.size());
    if (d == 0) throw std::invalid_argument("empty identification frame");
    const int n = frame[0].rows();
    ExactMatrix flat(n * n, d);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat.at(r * n + c, j) = frame[j].at(r, c);
    if (rank(flat) != d) throw std::invalid_argument("identification map not invertible");

    ExactMatrix out(d, d);
    for (int j = 0; j < d; ++j) {
        LieElement img = bracket(y, frame[j]);
        std::vector<GaussianRational> b;
        b.reserve(size_t(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) b.push_back(img.at(r, c));
        auto coords = solve(flat, b);
        if (!coords) throw std::invalid_argument("bracket image leaves the identification frame");
        for (int k = 0; k < d; ++k) out.at(k, j) = (*coords)[k];
    }
    return out;
}

GroupElement adjoint_embed_group(const GroupElement& g, const std::vector<LieElement>& frame) {
    const int d = static_cast<int>(frame.size());
    const int n = frame[0].rows();
    ExactMatrix flat(n * n, d);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat.at(r * n + c, j) = frame[j].at(r, c);

    ExactMatrix out(d, d);
    for (int j = 0; j < d; ++j) {
        LieElement img = g.mat * frame[j] * g.inv;
        std::vector<GaussianRational> b;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) b.push_back(img.at(r, c));
        auto coords = solve(flat, b);
        if (!coords) throw std::invalid_argument("conjugation leaves the identification frame");
        for (int k = 0; k < d; ++k) out.at(k, j) = (*coords)[k];
    }
    return GroupElement(out);
}

namespace {

ExactMatrix mat2(long a, long b, long c, long d) {
    ExactMatrix m(2, 2);
    m.at(0, 0) = GaussianRational(a);
    m.at(0, 1) = GaussianRational(b);
    m.at(1, 0) = GaussianRational(c);
    m.at(1, 1) = GaussianRational(d);
    return m;
}

struct Sl2Data {
    LieElement a1 = mat2(0, 1, 0, 0);
    LieElement a2 = mat2(0, 0, 1, 0);
    LieElement a3 = mat2(1, 0, 0, -1);
    LieElement h = mat2(0, 1, -1, 0);                         // a1 - a2
    LieElement xp, xm;                                        // a1 + a2 ∓ i a3
    Sl2Data() {
        GaussianRational i = GaussianRational::i();
        xp = a1 + a2 + a3.scaled(-i);
        xm = a1 + a2 + a3.scaled(i);
    }
};

const Sl2Data& sl2_data() {
    static const Sl2Data d;
    return d;
}

}  // namespace

LieAlgebra sl2_standard() {
    const auto& d = sl2_data();
    return LieAlgebra(2, {d.a1, d.a2, d.a3}, d.h, {d.h}, {d.xp}, {d.xm});
}

const std::vector<LieElement>& sl2_adjoint_frame() {
    static const std::vector<LieElement> frame = {sl2_data().a1 + sl2_data().a2, sl2_data().a3,
                                                  sl2_data().h};
    return frame;
}

LieAlgebra sl2_adjoint() {
    const auto& d = sl2_data();
    const auto& frame = sl2_adjoint_frame();
    auto embed = [&frame](const LieElement& y) { return adjoint_embed_element(y, frame); };
    return LieAlgebra(3, {embed(d.a1), embed(d.a2), embed(d.a3)}, embed(d.h), {embed(d.h)},
                      {embed(d.xp)}, {embed(d.xm)});
}

Polynomial sl2_adjoint_invariant() {
    // det of m1*(a1+a2) + m2*a3 + m3*(a1-a2) = -m1^2 - m2^2 + m3^2.
    Polynomial p = -r_squared(3);
    Monomial m3sq(3, 0);
    m3sq[2] = 2;
    p.add_term(m3sq, GaussianRational(2));
    return p;
}

LieElement preset_named_element(const std::string& preset, const std::string& name) {
    const auto& d = sl2_data();
    LieElement raw(2, 2);
    if (name == "a1")
        raw = d.a1;
    else if (name == "a2")
        raw = d.a2;
    else if (name == "a3")
        raw = d.a3;
    else if (name == "H")
        raw = d.h;
    else if (name == "X+")
        raw = d.xp;
    else if (name == "X-")
        raw = d.xm;
    else
        throw std::invalid_argument("unknown named Lie element '" + name + "'");
    if (preset == "sl2_standard") return raw;
    if (preset == "sl2_adjoint") return adjoint_embed_element(raw, sl2_adjoint_frame());
    throw std::invalid_argument("unknown preset '" + preset + "'");
}

GroupElement preset_torus_element(const std::string& preset, const Rational& c, const Rational& s) {
    if (c * c + s * s != 1)
        throw std::invalid_argument("torus point must satisfy c^2 + s^2 = 1 exactly");
    ExactMatrix rot(2, 2);
    rot.at(0, 0) = GaussianRational(c);
    rot.at(0, 1) = GaussianRational(s);
    rot.at(1, 0) = GaussianRational(-s);
    rot.at(1, 1) = GaussianRational(c);
    GroupElement g(rot);
    if (preset == "sl2_standard") return g;
    if (preset == "sl2_adjoint") return adjoint_embed_group(g, sl2_adjoint_frame());
    throw std::invalid_argument("unknown preset '" + preset + "'");
}

}  // namespace gkmod
