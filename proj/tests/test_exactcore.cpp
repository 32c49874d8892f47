#include "support.hpp"

#include "totred/errors.hpp"
#include "totred/matrix.hpp"
#include "totred/rational.hpp"

#include <doctest.h>

using namespace totred;
using totred::test::Gen;

TEST_CASE("rational literals parse to canonical form")
{
    CHECK(Rational::parse("-3/7").to_string() == "-3/7");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("+12/4").to_string() == "3");
    CHECK(Rational::parse("-0/5").to_string() == "0");
    CHECK(Rational::parse("-0/5").denominator_string() == "1");
    CHECK(Rational::parse("-14/21").numerator_string() == "-2");
    CHECK(Rational::parse("-14/21").denominator_string() == "3");
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
}

TEST_CASE("malformed rational literals are rejected")
{
    for (const char* bad : {"", "-", "1.5", "1/", "/2", "1/-2", "1/0", "+-1", "1e3", " 1", "1 ", "0x10", "1/2/3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), DomainError);
    }
}

TEST_CASE("rational arithmetic stays canonical")
{
    const Rational a(1, 6);
    const Rational b(1, 3);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "-1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "1/2");
    CHECK((b - b).to_string() == "0");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("determinant examples")
{
    CHECK(det(Matrix::identity(3)) == Rational(1));
    CHECK(det(Matrix{{1, 2}, {3, 4}}) == Rational(-2));
    CHECK(det(Matrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == Rational(0));
    CHECK(det(Matrix{{1, 2, 3, 4}, {0, 1, 0, 2}, {1, 2, 3, 4}, {5, 0, 1, 1}}) == Rational(0));
    CHECK_THROWS_AS(det(Matrix(2, 3)), DimensionError);
}

TEST_CASE("elimination needs a row swap when the leading pivot vanishes")
{
    const Matrix m{{0, 1, 2, 3}, {1, 0, 1, 0}, {2, 1, 0, 1}, {0, 0, 1, 1}};
    CHECK(det_bareiss(m) == totred::test::leibniz_det(m));
    CHECK(det(m) == det_cofactor(m));
}

TEST_CASE("determinant routes agree with the permutation expansion")
{
    Gen gen(11);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const Matrix m = gen.matrix(n);
            const Rational expected = totred::test::leibniz_det(m);
            CHECK(det_bareiss(m) == expected);
            CHECK(det_cofactor(m) == expected);
            CHECK(det(m) == expected);
        }
    }
}

TEST_CASE("determinant is multiplicative")
{
    Gen gen(12);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix a = gen.matrix(n);
            const Matrix b = gen.matrix(n);
            CHECK(det(mat_mul(a, b)) == det(a) * det(b));
        }
    }
}

TEST_CASE("determinant of a substituted matrix is linear in the column")
{
    Gen gen(13);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix m = gen.matrix(n);
        const Column u = gen.column(n);
        const Column w = gen.column(n);
        const Rational alpha = gen.rational();
        const Rational beta = gen.rational();
        const Column mix = column_add(column_scale(u, alpha), column_scale(w, beta));
        for (std::size_t i = 1; i <= n; ++i) {
            CHECK(det(column_substitute(m, i, mix)) ==
                  alpha * det(column_substitute(m, i, u)) + beta * det(column_substitute(m, i, w)));
        }
    }
}

TEST_CASE("matrix products and powers")
{
    const Matrix b{{1, 2}, {3, 4}};
    CHECK(mat_pow(b, 0) == Matrix::identity(2));
    CHECK(mat_pow(b, 1) == b);
    CHECK(mat_pow(b, 2) == Matrix{{7, 10}, {15, 22}});
    CHECK(mat_pow(b, 5) == mat_mul(mat_pow(b, 2), mat_pow(b, 3)));
    CHECK(mat_add(b, b) == mat_scale(b, Rational(2)));
    CHECK(mat_sub(b, b).is_zero());
    CHECK(mat_vec(Matrix::identity(3), Column{1, Rational(2, 3), -4}) == Column{1, Rational(2, 3), -4});
    CHECK(mat_vec(b, Column{1, 1}) == Column{3, 7});
    CHECK(b.trace() == Rational(5));
    CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(mat_add(Matrix(2, 2), Matrix(3, 3)), DimensionError);
    CHECK_THROWS_AS(mat_vec(b, Column{1}), DimensionError);
    CHECK_THROWS_AS(mat_pow(b, -1), DomainError);
}

TEST_CASE("column substitution and extraction use 1-based indices")
{
    const Matrix b{{1, 2}, {3, 4}};
    CHECK(column_substitute(Matrix::identity(2), 1, Column{5, 7}) == Matrix{{5, 0}, {7, 1}});
    CHECK(column_substitute(b, 2, Column{9, 8}) == Matrix{{1, 9}, {3, 8}});
    for (std::size_t i = 1; i <= 2; ++i) CHECK(column_substitute(b, i, column_of(b, i)) == b);
    CHECK(column_of(b, 2) == Column{2, 4});
    CHECK(unit_column(3, 2) == Column{0, 1, 0});
    CHECK_THROWS_AS(column_substitute(b, 0, Column{1, 1}), IndexError);
    CHECK_THROWS_AS(column_substitute(b, 3, Column{1, 1}), IndexError);
    CHECK_THROWS_AS(column_substitute(b, 1, Column{1}), DimensionError);
    CHECK_THROWS_AS(column_of(b, 3), IndexError);
}

TEST_CASE("matrix construction checks entry count")
{
    CHECK_THROWS_AS(Matrix(2, 2, std::vector<Rational>(3)), DimensionError);
    CHECK(Matrix(2, 2).is_zero());
}
