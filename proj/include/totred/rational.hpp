#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace totred {

/// Arbitrary-precision rational number.
/**
 * Thin value wrapper around GMP's \p mpq_class. Every value is kept in
 * canonical form: positive denominator, numerator and denominator coprime,
 * zero stored as 0/1.
 *
 * The text form used by all file formats is an optional sign, a decimal
 * integer and an optional "/" followed by a positive decimal integer
 * ("-3/7", "5", "+12/4"). Parsing canonicalizes, so "12/4" reads as 3.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}    // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);

    /// Parse a rational literal; throws DomainError on malformed text or zero denominator.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    std::string numerator_string() const;
    std::string denominator_string() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    /// Throws DomainError when dividing by zero.
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (-1)^k as a Rational.
inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace totred
