#include "totred/matrix.hpp"

#include "totred/errors.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace totred {

namespace {

void require_square(const Matrix& m, const char* what)
{
    if (!m.is_square()) {
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
}

void require_index(std::size_t i, std::size_t n, const char* what)
{
    if (i < 1 || i > n) {
        throw IndexError(std::string(what) + ": index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
}

Rational det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Rational det3(const Matrix& m)
{
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Rational det_cofactor_impl(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return det2(m);
    Rational total;
    std::vector<std::size_t> rows;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        cols.clear();
        for (std::size_t cc = 0; cc < n; ++cc) {
            if (cc != c) cols.push_back(cc);
        }
        Rational term = m(0, c) * det_cofactor_impl(submatrix(m, rows, cols));
        if (c % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix entries length " + std::to_string(entries_.size()) + " != " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Rational Matrix::trace() const
{
    require_square(*this, "trace");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[" : ", [");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) os << ", ";
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

Matrix identity(std::size_t n) { return Matrix::identity(n); }

Matrix mat_add(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    }
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) { return mat_add(a, mat_scale(b, Rational(-1))); }

Matrix mat_scale(const Matrix& m, const Rational& s)
{
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * s;
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
        }
    }
    return out;
}

Matrix mat_pow(const Matrix& m, long j)
{
    require_square(m, "mat_pow");
    if (j < 0) throw DomainError("mat_pow: negative exponent");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (j > 0) {
        if (j & 1) result = mat_mul(result, base);
        j >>= 1;
        if (j > 0) base = mat_mul(base, base);
    }
    return result;
}

Column mat_vec(const Matrix& m, std::span<const Rational> v)
{
    if (m.cols() != v.size()) throw DimensionError("mat_vec: column length mismatch");
    Column out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

Column column_of(const Matrix& m, std::size_t s)
{
    require_index(s, m.cols(), "column_of");
    Column out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, s - 1);
    return out;
}

Matrix column_substitute(const Matrix& m, std::size_t i, std::span<const Rational> v)
{
    require_square(m, "column_substitute");
    require_index(i, m.cols(), "column_substitute");
    if (v.size() != m.rows()) throw DimensionError("column_substitute: column length mismatch");
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, i - 1) = v[r];
    return out;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols)
{
    Matrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    }
    return out;
}

Rational det_cofactor(const Matrix& m)
{
    require_square(m, "det");
    return det_cofactor_impl(m);
}

Rational det_bareiss(const Matrix& m)
{
    require_square(m, "det");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Matrix a = m;
    Rational previous_pivot(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            negate = !negate;
        }
        const Rational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / previous_pivot;
            }
            a(i, k) = Rational(0);
        }
        previous_pivot = pivot;
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Rational det(const Matrix& m)
{
    require_square(m, "det");
    switch (m.rows()) {
    case 0:
        return Rational(1);
    case 1:
        return m(0, 0);
    case 2:
        return det2(m);
    case 3:
        return det3(m);
    default:
        return det_bareiss(m);
    }
}

Column column_add(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) throw DimensionError("column_add: length mismatch");
    Column out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Column column_scale(std::span<const Rational> v, const Rational& s)
{
    Column out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

Column unit_column(std::size_t n, std::size_t s)
{
    require_index(s, n, "unit_column");
    Column out(n);
    out[s - 1] = Rational(1);
    return out;
}

} // namespace totred
