#include "totred/rational.hpp"

#include "totred/errors.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace totred {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in rational literal '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    // mpq_class::get_str prints "n" for integers and "n/d" otherwise.
    return value_.get_str(10);
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other)
{
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other)
{
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other)
{
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other)
{
    if (other.is_zero()) throw DomainError("division by zero");
    value_ /= other.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace totred
