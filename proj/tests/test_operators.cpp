#include "support.hpp"

#include "totred/errors.hpp"
#include "totred/operators.hpp"

#include <doctest.h>

using namespace totred;
using totred::test::Gen;

namespace {

OperatorElement poly(std::vector<Rational> c) { return OperatorElement::polynomial(std::move(c)); }
OperatorElement seq(std::vector<Rational> v, long origin = 0) { return OperatorElement::sequence(origin, std::move(v)); }

} // namespace

TEST_CASE("operator kinds round-trip through their names")
{
    for (auto kind : {OperatorKind::shift, OperatorKind::derivative, OperatorKind::zero}) {
        CHECK(parse_operator_kind(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_operator_kind("Shift").has_value());
}

TEST_CASE("element construction")
{
    CHECK(poly({1, 0, 0}) == poly({1}));
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({}).degree() == -1);
    CHECK(poly({3, 2, 1}).degree() == 2);
    CHECK_THROWS_AS(seq({}), HorizonError);
    CHECK(seq({1, 2, 3}, 4).window() == Window{4, 6});
    CHECK(seq({0, 0}).is_zero());
    CHECK(seq({1, 2}, 3).zero_like() == seq({0, 0}, 3));
}

TEST_CASE("single applications")
{
    CHECK(apply(OperatorKind::derivative, poly({3, 2, 1})) == poly({2, 2}));
    CHECK(apply(OperatorKind::shift, seq({1, 1, 2, 3, 5})) == seq({1, 2, 3, 5}));
    CHECK(apply(OperatorKind::zero, seq({1, 1, 2})) == seq({0, 0, 0}));
    CHECK(apply(OperatorKind::zero, poly({1, 2})).is_zero());
    CHECK_THROWS_AS(apply(OperatorKind::shift, seq({7})), HorizonError);
    CHECK_THROWS_AS(apply(OperatorKind::derivative, seq({1, 2})), DomainError);
    // p(t) = t^2 shifted: (t + 1)^2 = 1 + 2t + t^2.
    CHECK(apply(OperatorKind::shift, poly({0, 0, 1})) == poly({1, 2, 1}));
}

TEST_CASE("powers")
{
    const OperatorElement e = seq({1, 2, 3, 4});
    CHECK(apply_power(OperatorKind::shift, e, 0) == e);
    CHECK(apply_power(OperatorKind::shift, e, 2) == seq({3, 4}));
    CHECK_THROWS_AS(apply_power(OperatorKind::shift, e, 4), HorizonError);
    CHECK(apply_power(OperatorKind::derivative, poly({0, 0, 0, 1}), 3) == poly({6}));
    CHECK(apply_power(OperatorKind::zero, poly({5}), 0) == poly({5}));
    CHECK(apply_power(OperatorKind::zero, poly({5}), 2).is_zero());
    CHECK_THROWS_AS(apply_power(OperatorKind::shift, e, -1), DomainError);
}

TEST_CASE("operators are linear")
{
    Gen gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational a = gen.rational();
        const Rational b = gen.rational();
        const OperatorElement u = gen.sequence(-2, 6);
        const OperatorElement w = gen.sequence(-2, 6);
        CHECK(apply(OperatorKind::shift, a * u + b * w) == a * apply(OperatorKind::shift, u) + b * apply(OperatorKind::shift, w));
        const OperatorElement p = gen.polynomial(6);
        const OperatorElement q = gen.polynomial(6);
        for (auto kind : {OperatorKind::derivative, OperatorKind::shift, OperatorKind::zero}) {
            CHECK(apply(kind, a * p + b * q) == a * apply(kind, p) + b * apply(kind, q));
        }
    }
}

TEST_CASE("power composition and derivative nilpotence")
{
    Gen gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        const OperatorElement s = gen.sequence(1, 9);
        const OperatorElement p = gen.polynomial(6);
        const long i = gen.integer(0, 4);
        const long j = gen.integer(0, 4);
        CHECK(apply_power(OperatorKind::shift, s, i + j) == apply_power(OperatorKind::shift, apply_power(OperatorKind::shift, s, j), i));
        for (auto kind : {OperatorKind::derivative, OperatorKind::shift, OperatorKind::zero}) {
            CHECK(apply_power(kind, p, i + j) == apply_power(kind, apply_power(kind, p, j), i));
        }
        CHECK(apply_power(OperatorKind::derivative, p, p.degree() + 1).is_zero());
        // Taylor shift agrees with evaluation at t + 1.
        const Rational t = gen.rational();
        CHECK(apply(OperatorKind::shift, p).value_at(t) == p.value_at(t + Rational(1)));
    }
}

TEST_CASE("sums truncate sequences to the common window")
{
    const OperatorElement a = seq({1, 2, 3, 4});
    const OperatorElement b = seq({10, 20});
    CHECK(a + b == seq({11, 22}));
    CHECK(a - a == seq({0, 0, 0, 0}));
    CHECK_THROWS_AS(a + seq({1}, 1), HeterogeneousColumnError);
    CHECK_THROWS_AS(a + poly({1}), HeterogeneousColumnError);
    CHECK(poly({1, 2, 3}) - poly({1, 2, 3}) == poly({}));
}

TEST_CASE("linear combinations and matrix action")
{
    const OperatorElement e = poly({1, Rational(1, 2), 3});
    CHECK(lincomb(std::vector<Rational>{1, -1}, std::vector<OperatorElement>{e, e}).is_zero());
    CHECK_THROWS_AS(lincomb(std::vector<Rational>{1}, std::vector<OperatorElement>{e, e}), DimensionError);
    CHECK_THROWS_AS(lincomb(std::vector<Rational>{}, std::vector<OperatorElement>{}), DimensionError);

    const ElementColumn col({seq({0, 1, 2, 3}), seq({5, 5, 5, 5})});
    CHECK(mat_act(Matrix::identity(2), col) == col);
    CHECK(apply_vector(OperatorKind::shift, col, 1) == ElementColumn({seq({1, 2, 3}), seq({5, 5, 5})}));
    CHECK(mat_act(Matrix{{1, 2}, {3, 4}}, col) == ElementColumn({seq({10, 11, 12, 13}), seq({20, 23, 26, 29})}));
    CHECK_THROWS_AS(mat_act(Matrix::identity(3), col), DimensionError);
}

TEST_CASE("columns must be homogeneous")
{
    CHECK_THROWS_AS(ElementColumn({seq({1}), poly({1})}), HeterogeneousColumnError);
    CHECK_THROWS_AS(ElementColumn({seq({1, 2}), seq({1})}), HeterogeneousColumnError);
    CHECK_THROWS_AS(ElementColumn({seq({1}, 0), seq({1}, 1)}), HeterogeneousColumnError);
    const ElementColumn c = ElementColumn::constants(Column{1, Rational(-2, 3)});
    CHECK(c.values_at(Rational(5)) == Column{1, Rational(-2, 3)});
}

TEST_CASE("evaluation at a point")
{
    CHECK(poly({1, 2, 3}).value_at(Rational(2)) == Rational(17));
    const OperatorElement s = seq({4, 5, 6}, 10);
    CHECK(s.value_at(Rational(11)) == Rational(5));
    CHECK_THROWS_AS(s.value_at(Rational(9)), HorizonError);
    CHECK_THROWS_AS(s.value_at(Rational(13)), HorizonError);
    CHECK_THROWS_AS(s.value_at(Rational(21, 2)), DomainError);
}

TEST_CASE("scalar equation residuals")
{
    // n = 1, d_1 = 0: A(x) = psi is a tautology when psi = A(x).
    const CharPoly trivial(std::vector<Rational>{0});
    const OperatorElement x = seq({3, 1, 4, 1, 5});
    CHECK(eval_scalar_equation(trivial, OperatorKind::shift, x, apply(OperatorKind::shift, x)).is_zero());

    // lambda^2 - 5 lambda - 2 on a sequence satisfying x(t+2) = 5 x(t+1) + 2 x(t).
    const CharPoly cp(std::vector<Rational>{-5, -2});
    const OperatorElement fib = seq({1, 1, 7, 37, 199, 1069});
    const OperatorElement zero_psi = seq({0, 0, 0, 0});
    const OperatorElement r = eval_scalar_equation(cp, OperatorKind::shift, fib, zero_psi);
    CHECK(r.is_zero());
    CHECK(r.window() == Window{0, 3});

    const OperatorElement bumped = seq({0, 0, 1, 0});
    const OperatorElement rb = eval_scalar_equation(cp, OperatorKind::shift, fib, bumped);
    CHECK(rb == seq({0, 0, -1, 0}));

    // Derivative: x = t gives x'' - 5x' - 2x = -5 - 2t.
    CHECK(eval_scalar_equation(cp, OperatorKind::derivative, poly({0, 1}), poly({-5, -2})).is_zero());
    CHECK_THROWS_AS(eval_scalar_equation(cp, OperatorKind::shift, seq({1, 2}), seq({0})), HorizonError);
}
