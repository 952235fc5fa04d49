#include "userial/matrix.hpp"

#include <cstdlib>

namespace userial {

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, Field::rationals());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_add: shape mismatch");
    Matrix r(a.rows(), a.cols(), f);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
    return r;
}

Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_sub: shape mismatch");
    Matrix r(a.rows(), a.cols(), f);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
    return r;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch");
    Matrix r(a.rows(), b.cols(), f);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (f.is_zero(b.at(k, j))) continue;
                r.at(i, j) = f.add(r.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
            }
        }
    return r;
}

Matrix mat_scale(const Field& f, const Scalar& c, const Matrix& a) {
    Matrix r(a.rows(), a.cols(), f);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f.mul(c, a.at(i, j));
    return r;
}

Vec mat_apply(const Field& f, const Matrix& a, const Vec& v) {
    if (a.cols() != static_cast<int>(v.size())) throw Error("mat_apply: shape mismatch");
    Vec r(static_cast<std::size_t>(a.rows()), f.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a.at(i, j)) && !f.is_zero(v[j]))
                r[i] = f.add(r[i], f.mul(a.at(i, j), v[j]));
    return r;
}

bool mat_is_zero(const Field& f, const Matrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a.at(i, j))) return false;
    return true;
}

Matrix mat_hstack(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("mat_hstack: row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), f);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix mat_vstack(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error("mat_vstack: col mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), f);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vec_add: size mismatch");
    Vec r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vec_sub: size mismatch");
    Vec r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& a) {
    Vec r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

bool vec_is_zero(const Field& f, const Vec& a) {
    for (const auto& x : a)
        if (!f.is_zero(x)) return false;
    return true;
}

RowEchelon row_reduce(const Field& f, Matrix m) {
    RowEchelon out;
    int lead = 0;
    int rows = m.rows(), cols = m.cols();
    for (int r = 0; r < rows && lead < cols; ++r) {
        int pivot_row = -1;
        while (lead < cols) {
            for (int i = r; i < rows; ++i) {
                if (!f.is_zero(m.at(i, lead))) {
                    pivot_row = i;
                    break;
                }
            }
            if (pivot_row >= 0) break;
            ++lead;
        }
        if (pivot_row < 0) break;
        if (pivot_row != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot_row, j), m.at(r, j));
        Scalar piv_inv = f.inv(m.at(r, lead));
        for (int j = lead; j < cols; ++j) m.at(r, j) = f.mul(piv_inv, m.at(r, j));
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m.at(i, lead))) continue;
            Scalar c = m.at(i, lead);
            for (int j = lead; j < cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(r, j)));
        }
        out.pivot_cols.push_back(lead);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    out.mat = std::move(m);
    return out;
}

int mat_rank(const Field& f, const Matrix& a) { return row_reduce(f, a).rank; }

Matrix kernel_basis(const Field& f, const Matrix& a) {
    RowEchelon re = row_reduce(f, a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : re.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Matrix k(a.cols(), static_cast<int>(free_cols.size()), f);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k.at(fc, static_cast<int>(fi)) = f.one();
        for (int r = 0; r < re.rank; ++r) {
            int pc = re.pivot_cols[static_cast<std::size_t>(r)];
            k.at(pc, static_cast<int>(fi)) = f.neg(re.mat.at(r, fc));
        }
    }
    return k;
}

std::optional<Vec> solve(const Field& f, const Matrix& a, const Vec& b) {
    if (a.rows() != static_cast<int>(b.size())) throw Error("solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1, f);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    RowEchelon re = row_reduce(f, std::move(aug));
    Vec x(static_cast<std::size_t>(a.cols()), f.zero());
    for (int r = 0; r < re.rank; ++r) {
        int pc = re.pivot_cols[static_cast<std::size_t>(r)];
        if (pc == a.cols()) return std::nullopt;  // inconsistent
        x[static_cast<std::size_t>(pc)] = re.mat.at(r, a.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    int n = a.rows();
    Matrix aug = mat_hstack(f, a, Matrix::identity(n, f));
    RowEchelon re = row_reduce(f, std::move(aug));
    if (re.rank < n) return std::nullopt;
    for (int r = 0; r < n; ++r)
        if (re.pivot_cols[static_cast<std::size_t>(r)] != r) return std::nullopt;
    Matrix inv(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = re.mat.at(i, n + j);
    return inv;
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient, f);
    for (const auto& v : vectors) s.add_vector(f, v);
    return s;
}

Vec Subspace::basis_vector(int i) const {
    Vec v(static_cast<std::size_t>(ambient_));
    for (int r = 0; r < ambient_; ++r) v[static_cast<std::size_t>(r)] = basis_.at(r, i);
    return v;
}

Vec Subspace::reduce(const Field& f, Vec v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("Subspace::reduce: size mismatch");
    for (int c = 0; c < basis_.cols(); ++c) {
        int pr = pivot_rows_[static_cast<std::size_t>(c)];
        const Scalar& coef = v[static_cast<std::size_t>(pr)];
        if (f.is_zero(coef)) continue;
        Scalar k = coef;
        for (int r = 0; r < ambient_; ++r)
            v[static_cast<std::size_t>(r)] = f.sub(v[static_cast<std::size_t>(r)], f.mul(k, basis_.at(r, c)));
    }
    return v;
}

bool Subspace::contains(const Field& f, const Vec& v) const { return vec_is_zero(f, reduce(f, v)); }

bool Subspace::contains(const Field& f, const Subspace& other) const {
    for (int c = 0; c < other.dim(); ++c)
        if (!contains(f, other.basis_vector(c))) return false;
    return true;
}

bool Subspace::add_vector(const Field& f, const Vec& v) {
    Vec r = reduce(f, v);
    int pivot = -1;
    for (int i = 0; i < ambient_; ++i) {
        if (!f.is_zero(r[static_cast<std::size_t>(i)])) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) return false;
    Scalar pi = f.inv(r[static_cast<std::size_t>(pivot)]);
    for (int i = 0; i < ambient_; ++i) r[static_cast<std::size_t>(i)] = f.mul(pi, r[static_cast<std::size_t>(i)]);
    // Eliminate the new pivot from existing columns, keep columns sorted by pivot row.
    Matrix nb(ambient_, basis_.cols() + 1, f);
    std::vector<int> nprows;
    int inserted_at = basis_.cols();
    for (int c = 0; c < basis_.cols(); ++c)
        if (pivot_rows_[static_cast<std::size_t>(c)] > pivot) {
            inserted_at = c;
            break;
        }
    int nc = 0;
    for (int c = 0; c <= basis_.cols(); ++c) {
        if (c == inserted_at) {
            for (int r2 = 0; r2 < ambient_; ++r2) nb.at(r2, nc) = r[static_cast<std::size_t>(r2)];
            nprows.push_back(pivot);
            ++nc;
        }
        if (c == basis_.cols()) break;
        Scalar coef = basis_.at(pivot, c);
        for (int r2 = 0; r2 < ambient_; ++r2)
            nb.at(r2, nc) = f.sub(basis_.at(r2, c), f.mul(coef, r[static_cast<std::size_t>(r2)]));
        nprows.push_back(pivot_rows_[static_cast<std::size_t>(c)]);
        ++nc;
    }
    basis_ = std::move(nb);
    pivot_rows_ = std::move(nprows);
    return true;
}

Subspace Subspace::sum(const Field& f, const Subspace& other) const {
    Subspace s = *this;
    for (int c = 0; c < other.dim(); ++c) s.add_vector(f, other.basis_vector(c));
    return s;
}

std::vector<Vec> coset_representatives(const Field& f, const Subspace& space, const Subspace& sub) {
    if (!space.contains(f, sub)) throw Error("coset_representatives: sub is not contained in space");
    Subspace acc = sub;
    std::vector<Vec> reps;
    for (int c = 0; c < space.dim(); ++c) {
        Vec v = space.basis_vector(c);
        if (acc.add_vector(f, v)) reps.push_back(std::move(v));
    }
    return reps;
}

}  // namespace userial
