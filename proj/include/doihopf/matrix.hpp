// Dense exact matrices over a Field, plus the tensor-index toolkit the
// whole library is built on.
//
// Conventions fixed here and used by every other header:
//   * Linear maps V -> W are (dim W) x (dim V) matrices acting on column
//     vectors; column vectors are n x 1 matrices.
//   * Tensor indices are row-major left-to-right: the basis vector
//     e_i (x) e_j of V (x) W, dim W = n, sits at index i*n + j.  The
//     leftmost tensor factor is always the most significant index.
//   * A linear map U: V -> W is flattened to a coordinate vector by
//     column-stacking: entry U(i, j) sits at flat index j*rows + i.
//   * Solving is exact Gaussian elimination with first-nonzero pivoting;
//     echelon bases are fully reduced with free columns in increasing
//     order, so every solution space has one canonical presentation.

#pragma once

#include "fields.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace doihopf {

template <Field F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Matrix column(const F& field, std::vector<Elem> entries) {
        Matrix m(field, entries.size(), 1);
        m.data_ = std::move(entries);
        return m;
    }

    /// e_i as a column vector of length n.
    static Matrix basis_vector(const F& field, std::size_t n, std::size_t i) {
        Matrix m(field, n, 1);
        m.at(i, 0) = field.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Elem& operator[](std::size_t i) {
        if (cols_ != 1) throw InputError("operator[] requires a column vector");
        return data_[i];
    }
    const Elem& operator[](std::size_t i) const {
        if (cols_ != 1) throw InputError("operator[] requires a column vector");
        return data_[i];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!field_.eq(data_[k], o.data_[k])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "+");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "-");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_same_field(o, "*");
        if (cols_ != o.rows_)
            throw InputError("matrix product shape mismatch: " + shape() + " * " + o.shape());
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& a = at(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Elem& b = o.at(k, j);
                    if (field_.is_zero(b)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
                }
            }
        return r;
    }

    Matrix scaled(const Elem& s) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.mul(s, data_[k]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Column-stacked coordinate vector of this matrix (see header comment).
    Matrix vectorize() const {
        Matrix v(field_, rows_ * cols_, 1);
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) v[j * rows_ + i] = at(i, j);
        return v;
    }

    static Matrix from_vector(const Matrix& v, std::size_t rows, std::size_t cols) {
        if (v.cols() != 1 || v.rows() != rows * cols)
            throw InputError("from_vector: size mismatch");
        Matrix m(v.field(), rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = v[j * rows + i];
        return m;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            for (std::size_t j = 0; j < cols_; ++j)
                s += (j ? " " : "") + field_.to_string(at(i, j));
            s += i + 1 == rows_ ? "]" : "\n";
        }
        return s;
    }

    void check_same_field(const Matrix& o, const char* op) const {
        if (!(field_ == o.field_))
            throw InputError(std::string("field mismatch in ") + op + ": " + field_.name() +
                             " vs " + o.field_.name());
    }

private:
    void check_same_shape(const Matrix& o, const char* op) const {
        check_same_field(o, op);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError(std::string("shape mismatch in ") + op + ": " + shape() + " vs " +
                             o.shape());
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// Kronecker product with row-major index pairing, so that
/// kron(A, B) * (v (x) w) = (A v) (x) (B w).
template <Field F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    a.check_same_field(b, "kron");
    Matrix<F> r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const F& f = a.field();
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const auto& x = a.at(ia, ja);
            if (f.is_zero(x)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) = f.mul(x, b.at(ib, jb));
        }
    return r;
}

/// The twist v (x) w -> w (x) v: a permutation matrix of size mn x mn
/// sending index i*n + j to j*m + i.
template <Field F>
Matrix<F> flip(const F& field, std::size_t m, std::size_t n) {
    Matrix<F> r(field, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(j * m + i, i * n + j) = field.one();
    return r;
}

/// Permutation matrix reordering tensor factors: factor s of the output is
/// factor order[s] of the input.  dims are the input factor dimensions.
template <Field F>
Matrix<F> tensor_permute(const F& field, const std::vector<std::size_t>& dims,
                         const std::vector<std::size_t>& order) {
    if (order.size() != dims.size()) throw InputError("tensor_permute: arity mismatch");
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    Matrix<F> r(field, total, total);
    std::vector<std::size_t> idx(dims.size(), 0);
    for (std::size_t in = 0; in < total; ++in) {
        // decode row-major multi-index of `in`
        std::size_t rem = in;
        for (std::size_t t = dims.size(); t-- > 0;) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
        }
        std::size_t out = 0;
        for (std::size_t s = 0; s < order.size(); ++s) out = out * dims[order[s]] + idx[order[s]];
        r.at(out, in) = field.one();
    }
    return r;
}

/// The full solution set of one linear system: a basis of the homogeneous
/// kernel plus, when the system is consistent, one particular solution
/// (canonically the reduced-echelon solution with free variables zero).
template <Field F>
struct AffineSolutionSpace {
    std::size_t ambient_dim;
    std::vector<Matrix<F>> homogeneous_basis;
    std::optional<Matrix<F>> particular;

    std::size_t dim() const { return homogeneous_basis.size(); }
    bool consistent() const { return particular.has_value(); }
};

namespace detail {

// In-place reduced row echelon form; returns the pivot column of each
// pivot row in order.
template <Field F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const auto piv_inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(piv_inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <Field F>
std::size_t rank(Matrix<F> m) {
    return detail::rref(m).size();
}

/// Solves A x = b exactly, returning the complete affine solution set.
template <Field F>
AffineSolutionSpace<F> solve_affine(const Matrix<F>& a, const Matrix<F>& b) {
    a.check_same_field(b, "solve_affine");
    if (b.cols() != 1 || b.rows() != a.rows())
        throw InputError("solve_affine: rhs must be a column of length " +
                         std::to_string(a.rows()));
    const F& f = a.field();
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = detail::rref(aug);

    AffineSolutionSpace<F> sol;
    sol.ambient_dim = a.cols();

    bool consistent = true;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == a.cols()) consistent = false;

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots)
        if (c < a.cols()) is_pivot[c] = true;

    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix<F> v(f, a.cols(), 1);
        v[free_col] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < a.cols()) v[pivots[r]] = f.neg(aug.at(r, free_col));
        sol.homogeneous_basis.push_back(std::move(v));
    }

    if (consistent) {
        Matrix<F> x(f, a.cols(), 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < a.cols()) x[pivots[r]] = aug.at(r, a.cols());
        sol.particular = std::move(x);
    }
    return sol;
}

/// Basis of ker(A), in the canonical reduced-echelon order.
template <Field F>
std::vector<Matrix<F>> nullspace(const Matrix<F>& a) {
    Matrix<F> zero(a.field(), a.rows(), 1);
    return solve_affine(a, zero).homogeneous_basis;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const F& f = a.field();
    const std::size_t n = a.rows();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    const auto pivots = detail::rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<F> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Row space of a list of vectors in canonical reduced-echelon form; two
/// subspaces are equal iff their canonical forms are equal.
template <Field F>
std::vector<Matrix<F>> canonical_span(const F& field, std::size_t ambient,
                                      const std::vector<Matrix<F>>& vectors) {
    Matrix<F> rows(field, vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = vectors[i][j];
    const auto pivots = detail::rref(rows);
    std::vector<Matrix<F>> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Matrix<F> v(field, ambient, 1);
        for (std::size_t j = 0; j < ambient; ++j) v[j] = rows.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace doihopf
