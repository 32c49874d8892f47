#pragma once

// Random generators and independent oracles shared by the unit and acceptance suites.
// Nothing here calls into the determinant, minor or adjugate code under test.

#include "totred/matrix.hpp"
#include "totred/operators.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace totred::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 9) { return Rational(integer(-bound, bound), integer(1, bound)); }

    Matrix matrix(std::size_t n, long bound = 9)
    {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(bound);
        }
        return m;
    }

    Column column(std::size_t n, long bound = 9)
    {
        Column v(n);
        for (auto& x : v) x = rational(bound);
        return v;
    }

    OperatorElement sequence(long origin, std::size_t horizon, long bound = 9)
    {
        return OperatorElement::sequence(origin, column(horizon, bound));
    }

    OperatorElement polynomial(long max_degree, long bound = 9)
    {
        const long deg = integer(-1, max_degree);
        return OperatorElement::polynomial(column(static_cast<std::size_t>(deg + 1), bound));
    }

    ElementColumn sequences(std::size_t n, long origin, std::size_t horizon, long bound = 9)
    {
        std::vector<OperatorElement> out;
        for (std::size_t r = 0; r < n; ++r) out.push_back(sequence(origin, horizon, bound));
        return ElementColumn(std::move(out));
    }

    ElementColumn polynomials(std::size_t n, long max_degree, long bound = 9)
    {
        std::vector<OperatorElement> out;
        for (std::size_t r = 0; r < n; ++r) out.push_back(polynomial(max_degree, bound));
        return ElementColumn(std::move(out));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Leibniz formula: sum over permutations of sign * product.
inline Rational leibniz_det(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (perm[a] > perm[b]) ++inversions;
            }
        }
        Rational prod(1);
        for (std::size_t r = 0; r < n; ++r) prod *= m(r, perm[r]);
        total += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Gauss-Jordan elimination solving M x = rhs; nullopt when M is singular.
inline std::optional<Column> gauss_solve(Matrix m, Column rhs)
{
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            std::swap(rhs[pivot], rhs[col]);
        }
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t c = 0; c < n; ++c) m(col, c) *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < n; ++c) m(r, c) -= f * m(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

/// Binomial coefficient as a Rational.
inline Rational binomial(long n, long k)
{
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long j = 1; j <= k; ++j) out = out * Rational(n - k + j) / Rational(j);
    return out;
}

} // namespace totred::test
