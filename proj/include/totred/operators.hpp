#pragma once

#include "totred/faddeev.hpp"
#include "totred/matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace totred {

/// The linear operator A acting on V.
enum class OperatorKind {
    shift,      // (A s)(t) = s(t + 1)
    derivative, // formal d/dt on polynomials
    zero,       // A = 0; A^0 is still the identity
};

std::string_view to_string(OperatorKind kind);
std::optional<OperatorKind> parse_operator_kind(std::string_view text);

/// Finite table s(origin), s(origin + 1), ..., s(origin + horizon - 1).
struct Sequence {
    long origin = 0;
    std::vector<Rational> values;

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Ascending coefficients; empty means the zero polynomial.
struct Polynomial {
    std::vector<Rational> coeffs;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Inclusive range of time indices on which a sequence is defined.
struct Window {
    long first = 0;
    long last = 0;

    friend bool operator==(const Window&, const Window&) = default;
};

/// An element of V: a finite rational sequence or a rational polynomial.
/**
 * Sums of sequences require equal origins and are truncated to the shorter
 * horizon, so every combination is defined on the largest window where all
 * operands are. Mixing variants throws HeterogeneousColumnError.
 */
class OperatorElement {
public:
    /// Throws HorizonError when values is empty.
    static OperatorElement sequence(long origin, std::vector<Rational> values);
    /// Trailing zero coefficients are dropped.
    static OperatorElement polynomial(std::vector<Rational> coeffs);
    static OperatorElement constant(const Rational& c) { return polynomial({c}); }

    bool is_sequence() const { return std::holds_alternative<Sequence>(data_); }
    bool is_polynomial() const { return std::holds_alternative<Polynomial>(data_); }
    const Sequence& as_sequence() const;
    const Polynomial& as_polynomial() const;

    /// Sequences only.
    long origin() const { return as_sequence().origin; }
    std::size_t horizon() const { return as_sequence().values.size(); }
    Window window() const;

    /// Polynomials only; -1 for the zero polynomial.
    long degree() const;

    bool is_zero() const;
    /// Zero element of the same variant (same origin and horizon for sequences).
    OperatorElement zero_like() const;

    /// s(t) for sequences (t must be an integer inside the window), p(t) for polynomials.
    Rational value_at(const Rational& t) const;

    OperatorElement operator-() const { return scaled(Rational(-1)); }
    OperatorElement scaled(const Rational& s) const;
    friend OperatorElement operator+(const OperatorElement& a, const OperatorElement& b);
    friend OperatorElement operator-(const OperatorElement& a, const OperatorElement& b);
    friend OperatorElement operator*(const Rational& s, const OperatorElement& e) { return e.scaled(s); }

    friend bool operator==(const OperatorElement&, const OperatorElement&) = default;

private:
    explicit OperatorElement(std::variant<Sequence, Polynomial> data) : data_(std::move(data)) {}

    std::variant<Sequence, Polynomial> data_;
};

std::ostream& operator<<(std::ostream& os, const OperatorElement& e);

/// A column of n elements of V sharing one variant (and one origin and horizon for sequences).
class ElementColumn {
public:
    ElementColumn() = default;
    /// Throws HeterogeneousColumnError on mixed variants, origins or horizons.
    explicit ElementColumn(std::vector<OperatorElement> entries);

    /// Column of constant polynomials.
    static ElementColumn constants(std::span<const Rational> values);

    std::size_t size() const { return entries_.size(); }
    const OperatorElement& operator[](std::size_t r) const { return entries_[r]; }
    const std::vector<OperatorElement>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Scalar column of the entries' values at t.
    Column values_at(const Rational& t) const;

    friend bool operator==(const ElementColumn&, const ElementColumn&) = default;

private:
    std::vector<OperatorElement> entries_;
};

OperatorElement apply(OperatorKind kind, const OperatorElement& e);
/// A^j(e); A^0 is the identity. Shift needs horizon > j.
OperatorElement apply_power(OperatorKind kind, const OperatorElement& e, long j);
ElementColumn apply_vector(OperatorKind kind, const ElementColumn& col, long j);

/// sum_r scalars[r] * elements[r]; needs at least one element to fix the variant.
OperatorElement lincomb(std::span<const Rational> scalars, std::span<const OperatorElement> elements);

/// M * col with M acting by rational linear combinations.
ElementColumn mat_act(const Matrix& m, const ElementColumn& col);

ElementColumn column_add(const ElementColumn& a, const ElementColumn& b);
ElementColumn column_sub(const ElementColumn& a, const ElementColumn& b);

/// Residual Delta_B(A)(x) - psi = A^n(x) + sum_k d_k A^{n-k}(x) - psi.
/** For sequences the residual lives on the largest window where every term is defined. */
OperatorElement eval_scalar_equation(const CharPoly& cp, OperatorKind kind, const OperatorElement& x,
                                     const OperatorElement& psi);

} // namespace totred
