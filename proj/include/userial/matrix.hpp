#pragma once

#include <optional>
#include <vector>

#include "userial/field.hpp"

namespace userial {

// Dense matrix over an exact field. Row-major. All algorithms are plain
// Gaussian elimination; sizes here are desk scale.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

    static Matrix identity(int n, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix transposed() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

using Vec = std::vector<Scalar>;

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& f, const Scalar& c, const Matrix& a);
Vec mat_apply(const Field& f, const Matrix& a, const Vec& v);
bool mat_is_zero(const Field& f, const Matrix& a);
Matrix mat_hstack(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_vstack(const Field& f, const Matrix& a, const Matrix& b);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& a);
bool vec_is_zero(const Field& f, const Vec& a);

struct RowEchelon {
    Matrix mat;                  // fully reduced row echelon form
    std::vector<int> pivot_cols; // one per nonzero row, increasing
    int rank = 0;
};

RowEchelon row_reduce(const Field& f, Matrix m);

int mat_rank(const Field& f, const Matrix& a);

// Columns form a basis of ker(a).
Matrix kernel_basis(const Field& f, const Matrix& a);

// One solution x of a x = b, if any.
std::optional<Vec> solve(const Field& f, const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Field& f, const Matrix& a);

// Subspace of K^n held in reduced column-echelon form, so equality and
// membership are canonical.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient, const Field& f) : ambient_(ambient), basis_(ambient, 0, f) {}

    // Span of the given vectors (each of length `ambient`).
    static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(int i) const;

    bool contains(const Field& f, const Vec& v) const;
    bool contains(const Field& f, const Subspace& other) const;
    // Residue of v after eliminating the pivots of this subspace; zero iff v
    // is a member.
    Vec reduce(const Field& f, Vec v) const;

    Subspace sum(const Field& f, const Subspace& other) const;
    bool add_vector(const Field& f, const Vec& v);  // true if dim grew

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    int ambient_;
    Matrix basis_;                 // ambient x dim, reduced column echelon
    std::vector<int> pivot_rows_;  // pivot row per column
};

// Vectors of `space` extending `sub` to a basis of `space`; their classes are
// a basis of space/sub.
std::vector<Vec> coset_representatives(const Field& f, const Subspace& space, const Subspace& sub);

}  // namespace userial
