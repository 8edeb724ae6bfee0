#pragma once

#include "sixteen/exact/fq.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sixteen::exact {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += k * row j
    void add_row(std::size_t i, std::size_t j, const BigInt& k);
    /// col i += k * col j
    void add_col(std::size_t i, std::size_t j, const BigInt& k);
    void negate_row(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

BigInt determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix D, U, V; // U * M * V = D
};

/// Smith normal form with unimodular transforms. The diagonal of D is
/// nonnegative and each entry divides the next; zeros come last.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal entries of the Smith form (length min(rows, cols)).
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Columns form a Z-basis of {v in Z^n : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Solve basis * c = target for an integer vector c, where `basis` has full
/// column rank. Returns false when no rational or no integral solution exists.
bool solve_integer(const IntMatrix& basis, const std::vector<BigInt>& target, std::vector<BigInt>& out);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

} // namespace sixteen::exact
