#pragma once

#include "gkmod/gaussian_rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkmod {

// Dense matrix over Q(i). Everything here is exact; sizes stay at desk
// scale (a few thousand at most), so dense Gaussian elimination is enough.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const GaussianRational& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussianRational& c) const;
    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    // Throws std::domain_error when singular / non-square.
    ExactMatrix inverse() const;
    GaussianRational determinant() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<GaussianRational> data_;
};

// Matrix commutator XY - YX.
ExactMatrix bracket(const ExactMatrix& x, const ExactMatrix& y);

struct RrefResult {
    ExactMatrix mat;              // reduced row echelon form
    std::vector<int> pivot_cols;  // pivot column per nonzero row
    // When requested: transform * input == mat (records row combinations).
    std::optional<ExactMatrix> transform;
};

// Reduced row echelon form over Q(i). Pivot choice prefers operands with
// small numerator/denominator limb counts to slow coefficient growth.
RrefResult rref(const ExactMatrix& a, bool want_transform = false);

// Columns form a basis of { x : a x = 0 }.
ExactMatrix kernel_basis(const ExactMatrix& a);

int rank(const ExactMatrix& a);

// One solution of a x = b, or nullopt when inconsistent.
std::optional<std::vector<GaussianRational>> solve(const ExactMatrix& a,
                                                   const std::vector<GaussianRational>& b);

}  // namespace gkmod
