#include "support.hpp"

#include "totred/errors.hpp"
#include "totred/faddeev.hpp"
#include "totred/minors.hpp"

#include <doctest.h>

using namespace totred;
using totred::test::Gen;

namespace {

// adj(M) entry (r, c) = (-1)^{r+c} det(M without row c and column r), via permutation determinants.
Matrix cofactor_adjugate(const Matrix& m)
{
    const std::size_t n = m.rows();
    Matrix adj(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::size_t> rows;
            std::vector<std::size_t> cols;
            for (std::size_t q = 0; q < n; ++q) {
                if (q != c) rows.push_back(q);
                if (q != r) cols.push_back(q);
            }
            Rational minor = n == 1 ? Rational(1) : totred::test::leibniz_det(submatrix(m, rows, cols));
            adj(r, c) = (r + c) % 2 == 0 ? minor : -minor;
        }
    }
    return adj;
}

Matrix shifted(const Matrix& b, const Rational& lambda)
{
    return mat_sub(mat_scale(Matrix::identity(b.rows()), lambda), b);
}

} // namespace

TEST_CASE("characteristic polynomial examples")
{
    const CharPoly cp = char_poly(Matrix{{1, 2}, {3, 4}});
    CHECK(cp.coeffs() == std::vector<Rational>{-5, -2});
    CHECK(cp.coeff(0) == Rational(1));

    // Symbol-free stand-in for [[b11, b12], [b21, b22]]: distinct primes.
    const Matrix g{{2, 3}, {5, 7}};
    const CharPoly cg = char_poly(g);
    CHECK(cg.coeff(1) == -(Rational(2) + Rational(7)));
    CHECK(cg.coeff(2) == Rational(2 * 7 - 3 * 5));

    for (long n = 1; n <= 6; ++n) {
        const CharPoly ci = char_poly(Matrix::identity(static_cast<std::size_t>(n)));
        for (long k = 1; k <= n; ++k) CHECK(ci.coeff(static_cast<std::size_t>(k)) == sign_power(k) * totred::test::binomial(n, k));
    }
    CHECK_THROWS_AS(char_poly(Matrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(cp.coeff(3), IndexError);
}

TEST_CASE("characteristic polynomial routes agree and match det(lambda I - B)")
{
    Gen gen(31);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const Matrix b = gen.matrix(n);
            const CharPoly cp = char_poly(b);
            CHECK(cp == char_poly_by_minors(b));
            for (int p = 0; p < 3 && n <= 6; ++p) {
                const Rational lambda = gen.rational();
                CHECK(cp.evaluate(lambda) == totred::test::leibniz_det(shifted(b, lambda)));
            }
        }
    }
}

TEST_CASE("adjugate coefficients: examples")
{
    const AdjugateCoeffs ac = adjugate_coeffs(Matrix{{1, 2}, {3, 4}});
    CHECK(ac[0] == Matrix::identity(2));
    CHECK(ac[1] == Matrix{{-4, 2}, {3, -1}});
    CHECK(ac.termination_residual().is_zero());
    CHECK(adjugate_at(ac, Rational(0)) == Matrix{{-4, 2}, {3, -1}});
    CHECK(adjugate_at(adjugate_coeffs(Matrix::identity(2)), Rational(2)) == Matrix::identity(2));

    const AdjugateCoeffs scalar = adjugate_coeffs(Matrix{{Rational(-3, 7)}});
    CHECK(scalar.dimension() == 1);
    CHECK(scalar[0] == Matrix::identity(1));
    CHECK(scalar.char_poly().coeff(1) == Rational(3, 7));
    CHECK(scalar.termination_residual().is_zero());
    CHECK(adjugate_at(scalar, Rational(17)) == Matrix::identity(1));
}

TEST_CASE("adjugate coefficients satisfy the recurrence and Cayley-Hamilton")
{
    Gen gen(32);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const Matrix b = gen.matrix(n);
            const AdjugateCoeffs ac(b);
            const CharPoly& cp = ac.char_poly();
            CHECK(ac[0] == Matrix::identity(n));
            for (std::size_t k = 1; k < n; ++k) {
                CHECK(ac[k] == mat_add(mat_mul(ac[k - 1], b), mat_scale(Matrix::identity(n), cp.coeff(k))));
            }
            CHECK(mat_add(mat_mul(ac[n - 1], b), mat_scale(Matrix::identity(n), cp.coeff(n))).is_zero());
            CHECK(ac.termination_residual().is_zero());
        }
    }
}

TEST_CASE("adjugate evaluation matches the cofactor adjugate and inverts lambda I - B")
{
    Gen gen(33);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix b = gen.matrix(n);
        const AdjugateCoeffs ac(b);
        for (int p = 0; p < 5; ++p) {
            const Rational lambda = gen.rational();
            const Matrix at = adjugate_at(ac, lambda);
            CHECK(at == cofactor_adjugate(shifted(b, lambda)));
            CHECK(mat_mul(shifted(b, lambda), at) == mat_scale(Matrix::identity(n), ac.char_poly().evaluate(lambda)));
        }
    }
}

TEST_CASE("adjugate coefficients act as signed substituted minor sums")
{
    Gen gen(34);
    for (std::size_t n = 1; n <= 6; ++n) {
        const Matrix b = gen.matrix(n);
        const AdjugateCoeffs ac(b);
        for (int c = 0; c < 3; ++c) {
            const Column v = gen.column(n);
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(mat_vec(ac[k], v) == column_scale(delta_vec(b, static_cast<long>(k + 1), v), sign_power(static_cast<long>(k))));
            }
        }
    }
}
