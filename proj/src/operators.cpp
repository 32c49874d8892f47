#include "totred/operators.hpp"

#include "totred/errors.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace totred {

namespace {

void trim(std::vector<Rational>& coeffs)
{
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

[[noreturn]] void variant_mismatch(const char* what)
{
    throw HeterogeneousColumnError(std::string(what) + ": cannot combine a sequence with a polynomial");
}

Polynomial taylor_shift(const Polynomial& p)
{
    // p(t + 1) = sum_j t^j sum_{m >= j} a_m C(m, j)
    const std::size_t len = p.coeffs.size();
    std::vector<Rational> out(len);
    std::vector<Rational> binom(len + 1);
    for (std::size_t m = 0; m < len; ++m) {
        // Row m of Pascal's triangle, updated in place from the right.
        binom[m] = Rational(1);
        for (std::size_t j = m; j-- > 1;) binom[j] += binom[j - 1];
        binom[0] = Rational(1);
        if (p.coeffs[m].is_zero()) continue;
        for (std::size_t j = 0; j <= m; ++j) out[j] += p.coeffs[m] * binom[j];
    }
    trim(out);
    return Polynomial{std::move(out)};
}

Polynomial formal_derivative(const Polynomial& p)
{
    if (p.coeffs.size() <= 1) return Polynomial{};
    std::vector<Rational> out(p.coeffs.size() - 1);
    for (std::size_t m = 1; m < p.coeffs.size(); ++m) out[m - 1] = p.coeffs[m] * Rational(static_cast<long>(m));
    trim(out);
    return Polynomial{std::move(out)};
}

} // namespace

std::string_view to_string(OperatorKind kind)
{
    switch (kind) {
    case OperatorKind::shift:
        return "shift";
    case OperatorKind::derivative:
        return "derivative";
    case OperatorKind::zero:
        return "zero";
    }
    return "?";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view text)
{
    if (text == "shift") return OperatorKind::shift;
    if (text == "derivative") return OperatorKind::derivative;
    if (text == "zero") return OperatorKind::zero;
    return std::nullopt;
}

OperatorElement OperatorElement::sequence(long origin, std::vector<Rational> values)
{
    if (values.empty()) throw HorizonError("sequence needs horizon >= 1");
    return OperatorElement(Sequence{origin, std::move(values)});
}

OperatorElement OperatorElement::polynomial(std::vector<Rational> coeffs)
{
    trim(coeffs);
    return OperatorElement(Polynomial{std::move(coeffs)});
}

const Sequence& OperatorElement::as_sequence() const
{
    if (!is_sequence()) throw DomainError("element is a polynomial, not a sequence");
    return std::get<Sequence>(data_);
}

const Polynomial& OperatorElement::as_polynomial() const
{
    if (!is_polynomial()) throw DomainError("element is a sequence, not a polynomial");
    return std::get<Polynomial>(data_);
}

Window OperatorElement::window() const
{
    const auto& s = as_sequence();
    return Window{s.origin, s.origin + static_cast<long>(s.values.size()) - 1};
}

long OperatorElement::degree() const { return static_cast<long>(as_polynomial().coeffs.size()) - 1; }

bool OperatorElement::is_zero() const
{
    if (is_polynomial()) return as_polynomial().coeffs.empty();
    const auto& v = as_sequence().values;
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

OperatorElement OperatorElement::zero_like() const
{
    if (is_polynomial()) return polynomial({});
    return sequence(origin(), std::vector<Rational>(horizon()));
}

Rational OperatorElement::value_at(const Rational& t) const
{
    if (is_polynomial()) {
        const auto& c = as_polynomial().coeffs;
        Rational acc;
        for (std::size_t m = c.size(); m-- > 0;) acc = acc * t + c[m];
        return acc;
    }
    if (!t.is_integer()) throw DomainError("sequence index " + t.to_string() + " is not an integer");
    const auto& s = as_sequence();
    const Rational offset = t - Rational(s.origin);
    if (offset.sign() < 0 || offset >= Rational(static_cast<long>(s.values.size()))) {
        throw HorizonError("sequence index " + t.to_string() + " outside its window");
    }
    return s.values[static_cast<std::size_t>(offset.raw().get_num().get_si())];
}

OperatorElement OperatorElement::scaled(const Rational& s) const
{
    if (is_polynomial()) {
        std::vector<Rational> c = as_polynomial().coeffs;
        for (auto& x : c) x *= s;
        return polynomial(std::move(c));
    }
    std::vector<Rational> v = as_sequence().values;
    for (auto& x : v) x *= s;
    return sequence(origin(), std::move(v));
}

OperatorElement operator+(const OperatorElement& a, const OperatorElement& b)
{
    if (a.is_polynomial() != b.is_polynomial()) variant_mismatch("element sum");
    if (a.is_polynomial()) {
        const auto& x = a.as_polynomial().coeffs;
        const auto& y = b.as_polynomial().coeffs;
        std::vector<Rational> out(std::max(x.size(), y.size()));
        for (std::size_t m = 0; m < x.size(); ++m) out[m] += x[m];
        for (std::size_t m = 0; m < y.size(); ++m) out[m] += y[m];
        return OperatorElement::polynomial(std::move(out));
    }
    if (a.origin() != b.origin()) {
        throw HeterogeneousColumnError("element sum: sequence origins " + std::to_string(a.origin()) + " and " +
                                       std::to_string(b.origin()) + " differ");
    }
    const auto& x = a.as_sequence().values;
    const auto& y = b.as_sequence().values;
    std::vector<Rational> out(std::min(x.size(), y.size()));
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = x[m] + y[m];
    return OperatorElement::sequence(a.origin(), std::move(out));
}

OperatorElement operator-(const OperatorElement& a, const OperatorElement& b) { return a + (-b); }

std::ostream& operator<<(std::ostream& os, const OperatorElement& e)
{
    if (e.is_polynomial()) {
        const auto& c = e.as_polynomial().coeffs;
        if (c.empty()) return os << "poly[]";
        os << "poly[";
        for (std::size_t m = 0; m < c.size(); ++m) os << (m == 0 ? "" : ", ") << c[m];
        return os << ']';
    }
    const auto& s = e.as_sequence();
    os << "seq@" << s.origin << '[';
    for (std::size_t m = 0; m < s.values.size(); ++m) os << (m == 0 ? "" : ", ") << s.values[m];
    return os << ']';
}

ElementColumn::ElementColumn(std::vector<OperatorElement> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) return;
    const OperatorElement& first = entries_.front();
    for (const auto& e : entries_) {
        if (e.is_polynomial() != first.is_polynomial()) {
            throw HeterogeneousColumnError("column mixes sequences and polynomials");
        }
        if (e.is_sequence() && (e.origin() != first.origin() || e.horizon() != first.horizon())) {
            throw HeterogeneousColumnError("column sequences differ in origin or horizon");
        }
    }
}

ElementColumn ElementColumn::constants(std::span<const Rational> values)
{
    std::vector<OperatorElement> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(OperatorElement::constant(v));
    return ElementColumn(std::move(out));
}

Column ElementColumn::values_at(const Rational& t) const
{
    Column out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value_at(t));
    return out;
}

OperatorElement apply(OperatorKind kind, const OperatorElement& e)
{
    switch (kind) {
    case OperatorKind::zero:
        return e.zero_like();
    case OperatorKind::derivative:
        if (!e.is_polynomial()) throw DomainError("the derivative operator acts on polynomials only");
        return OperatorElement::polynomial(formal_derivative(e.as_polynomial()).coeffs);
    case OperatorKind::shift:
        if (e.is_polynomial()) return OperatorElement::polynomial(taylor_shift(e.as_polynomial()).coeffs);
        if (e.horizon() < 2) throw HorizonError("shift of a horizon-1 sequence: horizon exhausted");
        {
            const auto& v = e.as_sequence().values;
            return OperatorElement::sequence(e.origin(), std::vector<Rational>(v.begin() + 1, v.end()));
        }
    }
    throw DomainError("unknown operator kind");
}

OperatorElement apply_power(OperatorKind kind, const OperatorElement& e, long j)
{
    if (j < 0) throw DomainError("operator power must be non-negative");
    if (j == 0) return e;
    if (kind == OperatorKind::zero) return e.zero_like();
    if (kind == OperatorKind::shift && e.is_sequence()) {
        if (static_cast<long>(e.horizon()) <= j) {
            throw HorizonError("A^" + std::to_string(j) + " on a sequence of horizon " + std::to_string(e.horizon()) +
                               ": horizon exhausted");
        }
        const auto& v = e.as_sequence().values;
        return OperatorElement::sequence(e.origin(), std::vector<Rational>(v.begin() + j, v.end()));
    }
    OperatorElement out = e;
    for (long step = 0; step < j; ++step) out = apply(kind, out);
    return out;
}

ElementColumn apply_vector(OperatorKind kind, const ElementColumn& col, long j)
{
    std::vector<OperatorElement> out;
    out.reserve(col.size());
    for (const auto& e : col) out.push_back(apply_power(kind, e, j));
    return ElementColumn(std::move(out));
}

OperatorElement lincomb(std::span<const Rational> scalars, std::span<const OperatorElement> elements)
{
    if (scalars.size() != elements.size()) throw DimensionError("lincomb: scalar and element counts differ");
    if (elements.empty()) throw DimensionError("lincomb: empty combination has no variant");
    OperatorElement acc = elements[0].scaled(scalars[0]);
    for (std::size_t r = 1; r < elements.size(); ++r) acc = acc + elements[r].scaled(scalars[r]);
    return acc;
}

ElementColumn mat_act(const Matrix& m, const ElementColumn& col)
{
    if (m.cols() != col.size()) throw DimensionError("mat_act: column length mismatch");
    std::vector<OperatorElement> out;
    out.reserve(m.rows());
    std::vector<Rational> row(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        out.push_back(lincomb(row, col.entries()));
    }
    return ElementColumn(std::move(out));
}

ElementColumn column_add(const ElementColumn& a, const ElementColumn& b)
{
    if (a.size() != b.size()) throw DimensionError("column_add: length mismatch");
    std::vector<OperatorElement> out;
    out.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) out.push_back(a[r] + b[r]);
    return ElementColumn(std::move(out));
}

ElementColumn column_sub(const ElementColumn& a, const ElementColumn& b)
{
    if (a.size() != b.size()) throw DimensionError("column_sub: length mismatch");
    std::vector<OperatorElement> out;
    out.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) out.push_back(a[r] - b[r]);
    return ElementColumn(std::move(out));
}

OperatorElement eval_scalar_equation(const CharPoly& cp, OperatorKind kind, const OperatorElement& x,
                                     const OperatorElement& psi)
{
    const long n = static_cast<long>(cp.degree());
    OperatorElement acc = apply_power(kind, x, n);
    for (long k = 1; k <= n; ++k) {
        const Rational& d = cp.coeff(static_cast<std::size_t>(k));
        acc = acc + apply_power(kind, x, n - k).scaled(d);
    }
    return acc - psi;
}

} // namespace totred
