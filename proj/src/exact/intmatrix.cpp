#include "sixteen/exact/intmatrix.hpp"

#include "sixteen/errors.hpp"
#include "sixteen/exact/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace sixteen::exact {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged IntMatrix initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("IntMatrix dimension mismatch in product");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const BigInt& k) {
    if (sgn(k) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const BigInt& k) {
    if (sgn(k) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(a(piv, k)) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Floor-style quotient that keeps remainders small in absolute value.
BigInt round_quotient(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt r = a - q * b;
    if (2 * abs(r) > abs(b)) q += sgn(b) * sgn(r);
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& D = s.D;
    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        auto move_min_to_pivot = [&](bool whole_block) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (!whole_block && i != t && j != t) continue;
                    if (sgn(D(i, j)) == 0) continue;
                    if (bi == rows || abs(D(i, j)) < abs(D(bi, bj))) bi = i, bj = j;
                }
            if (bi == rows) return false;
            D.swap_rows(t, bi);
            s.U.swap_rows(t, bi);
            D.swap_cols(t, bj);
            s.V.swap_cols(t, bj);
            return true;
        };
        if (!move_min_to_pivot(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(D(i, t)) == 0) continue;
                const BigInt q = round_quotient(D(i, t), D(t, t));
                D.add_row(i, t, -q);
                s.U.add_row(i, t, -q);
                if (sgn(D(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(D(t, j)) == 0) continue;
                const BigInt q = round_quotient(D(t, j), D(t, t));
                D.add_col(j, t, -q);
                s.V.add_col(j, t, -q);
                if (sgn(D(t, j)) != 0) clean = false;
            }
            if (!clean) {
                move_min_to_pivot(false);
                continue;
            }
            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) continue;
                    D.add_row(t, i, 1);
                    s.U.add_row(t, i, 1);
                    fixed = true;
                    break;
                }
            if (!fixed) break;
        }
        if (sgn(D(t, t)) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(s.D(i, i));
    return d;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    std::size_t r = 0;
    while (r < std::min(m.rows(), m.cols()) && sgn(s.D(r, r)) != 0) ++r;
    IntMatrix k(m.cols(), m.cols() - r);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = s.V(i, j);
    return k;
}

std::size_t rank(const IntMatrix& m) {
    Matrix<Rational> q(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return exact::rank(q);
}

bool solve_integer(const IntMatrix& basis, const std::vector<BigInt>& target, std::vector<BigInt>& out) {
    const std::size_t n = basis.rows(), r = basis.cols();
    Matrix<Rational> aug(n, r + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = Rational(basis(i, j));
        aug(i, r) = Rational(target[i]);
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == r) return false;
    if (pivots.size() != r) throw Error("solve_integer: basis is not of full column rank");
    out.assign(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const Rational& v = aug(k, r);
        if (v.get_den() != 1) return false;
        out[pivots[k]] = v.get_num();
    }
    return true;
}

} // namespace sixteen::exact
