#pragma once

#include "totred/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace totred {

using Column = std::vector<Rational>;

/// Dense row-major rational matrix.
/**
 * Storage access through operator() is 0-based. Operations that mirror the
 * matrix notation of the reduction formulae (column_of, column_substitute,
 * minor anchors) take 1-based indices.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const Rational> entries() const { return entries_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    Rational trace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix identity(std::size_t n);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& m, const Rational& s);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// M^j; M^0 is the identity.
Matrix mat_pow(const Matrix& m, long j);
Column mat_vec(const Matrix& m, std::span<const Rational> v);

/// Column s (1-based).
Column column_of(const Matrix& m, std::size_t s);

/// M^i(v): M with column i (1-based) replaced by v.
Matrix column_substitute(const Matrix& m, std::size_t i, std::span<const Rational> v);

/// Submatrix m[rows, cols] with 0-based index lists.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Exact determinant: cofactor expansion for n <= 3, fraction-free elimination above.
Rational det(const Matrix& m);
/// Laplace expansion along the first row; factorial cost, used as a cross-check.
Rational det_cofactor(const Matrix& m);
/// Bareiss fraction-free elimination with row swaps on zero pivots.
Rational det_bareiss(const Matrix& m);

Column column_add(std::span<const Rational> a, std::span<const Rational> b);
Column column_scale(std::span<const Rational> v, const Rational& s);

/// e_s of length n (1-based s).
Column unit_column(std::size_t n, std::size_t s);

} // namespace totred
