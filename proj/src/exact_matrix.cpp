#include "gkmod/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gkmod {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = GaussianRational::one();
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols_) throw std::invalid_argument("ragged rows");
        for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    ExactMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const GaussianRational& b = o.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<GaussianRational> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y) {
    return x * y - y * x;
}

RrefResult rref(const ExactMatrix& a, bool want_transform) {
    RrefResult res;
    res.mat = a;
    ExactMatrix t;
    if (want_transform) t = ExactMatrix::identity(a.rows());
    ExactMatrix& m = res.mat;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        // Pivot: smallest coefficient-size nonzero candidate in this column.
        int pivot = -1;
        size_t best = 0;
        for (int r = lead; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            size_t sz = m.at(r, col).size_hint();
            if (pivot < 0 || sz < best) {
                pivot = r;
                best = sz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead, c));
            if (want_transform)
                for (int c = 0; c < t.cols(); ++c) std::swap(t.at(pivot, c), t.at(lead, c));
        }
        GaussianRational inv = m.at(lead, col).inverse();
        for (int c = col; c < m.cols(); ++c)
            if (!m.at(lead, c).is_zero()) m.at(lead, c) *= inv;
        if (want_transform)
            for (int c = 0; c < t.cols(); ++c)
                if (!t.at(lead, c).is_zero()) t.at(lead, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) {
                if (m.at(lead, c).is_zero()) continue;
                m.at(r, c) -= f * m.at(lead, c);
            }
            if (want_transform) {
                for (int c = 0; c < t.cols(); ++c) {
                    if (t.at(lead, c).is_zero()) continue;
                    t.at(r, c) -= f * t.at(lead, c);
                }
            }
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    if (want_transform) res.transform = std::move(t);
    return res;
}

int rank(const ExactMatrix& a) {
    return static_cast<int>(rref(a).pivot_cols.size());
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    ExactMatrix kb(a.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        kb.at(fc, static_cast<int>(k)) = GaussianRational::one();
        for (size_t prow = 0; prow < r.pivot_cols.size(); ++prow)
            kb.at(r.pivot_cols[prow], static_cast<int>(k)) = -r.mat.at(static_cast<int>(prow), fc);
    }
    return kb;
}

std::optional<std::vector<GaussianRational>> solve(const ExactMatrix& a,
                                                   const std::vector<GaussianRational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    std::vector<GaussianRational> x(a.cols());
    for (size_t prow = 0; prow < rr.pivot_cols.size(); ++prow) {
        int pc = rr.pivot_cols[prow];
        if (pc == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
        x[pc] = rr.mat.at(static_cast<int>(prow), a.cols());
    }
    return x;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = GaussianRational::one();
    }
    RrefResult rr = rref(aug);
    for (int r = 0; r < rows_; ++r)
        if (static_cast<int>(rr.pivot_cols.size()) <= r || rr.pivot_cols[r] != r)
            throw std::domain_error("matrix is singular");
    ExactMatrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = rr.mat.at(r, cols_ + c);
    return inv;
}

GaussianRational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
    ExactMatrix m = *this;
    GaussianRational det = GaussianRational::one();
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return GaussianRational::zero();
        if (pivot != col) {
            for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        GaussianRational inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) * inv;
            for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace gkmod
