/*
 * Copyright 2026 The spinor-kummer developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Dense exact matrices with reduced row echelon form, kernels and solving.

#ifndef KUMMER_MATRIX_HPP
#define KUMMER_MATRIX_HPP

#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/fields.hpp"

namespace kummer {

template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, field_.zero()) {}

    static Matrix identity(const F& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        internal_check(cols_ == o.rows_, "matrix product shape mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, o.at(k, j)));
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        internal_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
        return r;
    }
    Matrix scaled(const Elem& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = field_.mul(x, s);
        return r;
    }
    Matrix transposed() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        internal_check(static_cast<int>(v.size()) == cols_, "matrix apply shape mismatch");
        std::vector<Elem> r(rows_, field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j))) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RowReduction {
    Matrix<F> echelon;    // reduced row echelon form
    Matrix<F> transform;  // invertible; transform * input == echelon
    int rank;
    std::vector<int> pivot_cols;
};

template <class F>
RowReduction<F> row_reduce(const Matrix<F>& m) {
    const F& k = m.field();
    Matrix<F> e = m;
    Matrix<F> t = Matrix<F>::identity(k, m.rows());
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!k.is_zero(e.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < m.cols(); ++j) std::swap(e.at(piv, j), e.at(rank, j));
            for (int j = 0; j < m.rows(); ++j) std::swap(t.at(piv, j), t.at(rank, j));
        }
        typename F::Elem inv = k.inv(e.at(rank, col));
        for (int j = 0; j < m.cols(); ++j) e.at(rank, j) = k.mul(e.at(rank, j), inv);
        for (int j = 0; j < m.rows(); ++j) t.at(rank, j) = k.mul(t.at(rank, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || k.is_zero(e.at(i, col))) continue;
            typename F::Elem c = e.at(i, col);
            for (int j = 0; j < m.cols(); ++j) e.at(i, j) = k.sub(e.at(i, j), k.mul(c, e.at(rank, j)));
            for (int j = 0; j < m.rows(); ++j) t.at(i, j) = k.sub(t.at(i, j), k.mul(c, t.at(rank, j)));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(e), std::move(t), rank, std::move(pivots)};
}

template <class F>
int matrix_rank(const Matrix<F>& m) {
    return row_reduce(m).rank;
}

// Basis of the right kernel, one vector per row of the result.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& k = m.field();
    RowReduction<F> rr = row_reduce(m);
    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(m.cols(), 0);
        for (int c : rr.pivot_cols) is_pivot[c] = 1;
        for (int j = 0; j < m.cols(); ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    Matrix<F> ker(k, static_cast<int>(free_cols.size()), m.cols());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        ker.at(static_cast<int>(fi), fc) = k.one();
        for (int r = 0; r < rr.rank; ++r)
            ker.at(static_cast<int>(fi), rr.pivot_cols[r]) = k.neg(rr.echelon.at(r, fc));
    }
    return ker;
}

template <class F>
Matrix<F> matrix_inverse(const Matrix<F>& m) {
    internal_check(m.rows() == m.cols(), "inverse of a non-square matrix");
    RowReduction<F> rr = row_reduce(m);
    if (rr.rank != m.rows()) throw MathError("matrix is singular");
    return rr.transform;
}

// Solves x * m == rhs for a single row vector rhs (i.e. rhs in the row span).
template <class F>
std::vector<typename F::Elem> solve_left(const Matrix<F>& m, const std::vector<typename F::Elem>& rhs) {
    const F& k = m.field();
    // Transpose and solve m^T x^T = rhs^T by elimination on an augmented matrix.
    Matrix<F> aug(k, m.cols(), m.rows() + 1);
    for (int i = 0; i < m.cols(); ++i) {
        for (int j = 0; j < m.rows(); ++j) aug.at(i, j) = m.at(j, i);
        aug.at(i, m.rows()) = rhs[i];
    }
    RowReduction<F> rr = row_reduce(aug);
    std::vector<typename F::Elem> x(m.rows(), k.zero());
    for (int r = 0; r < rr.rank; ++r) {
        int pc = rr.pivot_cols[r];
        if (pc == m.rows()) throw MathError("linear system has no solution");
        x[pc] = rr.echelon.at(r, m.rows());
    }
    return x;
}

template <class F>
typename F::Elem matrix_det(Matrix<F> m) {
    internal_check(m.rows() == m.cols(), "determinant of a non-square matrix");
    const F& k = m.field();
    typename F::Elem det = k.one();
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!k.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) return k.zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = k.neg(det);
        }
        det = k.mul(det, m.at(col, col));
        typename F::Elem inv = k.inv(m.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (k.is_zero(m.at(i, col))) continue;
            typename F::Elem c = k.mul(m.at(i, col), inv);
            for (int j = col; j < n; ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(c, m.at(col, j)));
        }
    }
    return det;
}

}  // namespace kummer

#endif
