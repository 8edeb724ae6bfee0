#pragma once

#include "sixteen/errors.hpp"
#include "sixteen/exact/fq.hpp"
#include "sixteen/exact/rational.hpp"
#include "sixteen/exact/unipoly.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sixteen::exact {

/// Row-major dense matrix over a field.
template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const F& zero) : rows_(rows), cols_(cols), a_(rows * cols, zero), zero_(zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const F& zero() const { return zero_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (exact::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = F(r(i, j) + a(i, k) * b(k, j));
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
    F zero_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && exact::is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const F inv = F(one_like(m.zero()) / m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F(m(row, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || exact::is_zero(m(i, col))) continue;
            const F t = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = F(m(i, j) - t * m(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), m.zero());
        v[free] = one_like(m.zero());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(-m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    F det = one_like(m.zero());
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && exact::is_zero(m(piv, col))) ++piv;
        if (piv == n) return m.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = F(-det);
        }
        det = F(det * m(col, col));
        const F inv = F(one_like(m.zero()) / m(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (exact::is_zero(m(i, col))) continue;
            const F t = F(m(i, col) * inv);
            for (std::size_t j = col; j < n; ++j) m(i, j) = F(m(i, j) - t * m(col, j));
        }
    }
    return det;
}

/// Sylvester matrix of f (rows first) and g, sized (deg f + deg g).
/// `df`, `dg` are the formal degrees; leading coefficients may vanish.
template <class F>
Matrix<F> sylvester_matrix(const UniPoly<F>& f, const UniPoly<F>& g, int df, int dg) {
    const std::size_t n = static_cast<std::size_t>(df + dg);
    Matrix<F> s(n, n, f.zero());
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s(i, i + j) = f.coeff(df - j);
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s(dg + i, i + j) = g.coeff(dg - j);
    return s;
}

/// Res(f, g) = det Sylvester(f, g) = lc(f)^{deg g} * prod g(roots of f).
/// Throws ZeroPolynomial when either input is zero.
template <class F>
F resultant(const UniPoly<F>& f, const UniPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return one_like(f.zero());
    return determinant(sylvester_matrix(f, g, f.degree(), g.degree()));
}

/// Resultant with prescribed formal degrees (used when a leading coefficient
/// may vanish after specialisation).
template <class F>
F resultant_formal(const UniPoly<F>& f, const UniPoly<F>& g, int df, int dg) {
    if (df == 0 && dg == 0) return one_like(f.zero());
    return determinant(sylvester_matrix(f, g, df, dg));
}

} // namespace sixteen::exact
