#pragma once

#include "fanocfg/errors.hpp"
#include "fanocfg/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanocfg {

/// Dense row-major matrix over an exact scalar type K (Integer, Rational or
/// CycloElem). K needs + - * ==, and free functions is_zero / one_like /
/// zero_like; field algorithms (rref, kernel, solve) additionally need /.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    /// Rows must all have the same length.
    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size(), rows[0].empty() ? K() : zero_like(rows[0][0]));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    Matrix transpose() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const K&>()))> {
        using R = decltype(f(std::declval<const K&>()));
        std::vector<std::vector<R>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(f((*this)(i, j)));
        return Matrix<R>::from_rows(out);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
        if (a.data_.empty() || b.data_.empty()) {
            Matrix out;
            out.rows_ = a.rows_;
            out.cols_ = b.cols_;
            return out;
        }
        Matrix out(a.rows_, b.cols_, zero_like(a.data_.front()));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const K& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Matrix-vector product.
    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
        std::vector<K> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc = zero_like(v.empty() ? (*this)(i, 0) : v.front());
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(v[j]) && !is_zero((*this)(i, j))) acc += (*this)(i, j) * v[j];
            out.push_back(std::move(acc));
        }
        return out;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <class K>
K trace(const Matrix<K>& m) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("trace of a non-square matrix");
    K acc = m(0, 0);
    for (std::size_t i = 1; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

template <class K>
Matrix<K> power(const Matrix<K>& m, unsigned e) {
    Matrix<K> out = Matrix<K>::identity(m.rows(), one_like(m(0, 0)));
    for (unsigned i = 0; i < e; ++i) out = out * m;
    return out;
}

/// Reduced row echelon form in place over a field. Returns the pivot
/// columns in increasing order.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const K inv = one_like(m(r, c)) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that
/// free position (the standard RREF nullspace basis).
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const K& one) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<K> v(m.cols(), zero_like(one));
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves a x = b over a field; nullopt when inconsistent. Free variables
/// are set to zero.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
    if (b.empty()) return std::vector<K>(a.cols());
    Matrix<K> aug(a.rows(), a.cols() + 1, zero_like(b.front()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols(), zero_like(b.front()));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

/// Determinant of a square integer matrix (fraction-free Bareiss).
Integer determinant(Matrix<Integer> m);

/// Determinant over a field by elimination.
template <class K>
K field_determinant(Matrix<K> m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0) throw DomainError("determinant of an empty matrix");
    K det = one_like(m(0, 0));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) return zero_like(det);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        const K inv = one_like(det) / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const K f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    return m.map([](const Integer& z) { return Rational(z); });
}

} // namespace fanocfg
