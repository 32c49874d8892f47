#include "totred/minors.hpp"

#include "totred/errors.hpp"

#include <string>

namespace totred {

namespace {

void require_square(const Matrix& m)
{
    if (!m.is_square()) throw DimensionError("principal minors need a square matrix");
}

void require_anchor(std::size_t i, std::size_t n)
{
    if (i < 1 || i > n) throw IndexError("minor anchor column " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

Rational principal_minor(const Matrix& m, std::span<const std::size_t> subset)
{
    return det(submatrix(m, subset, subset));
}

Rational anchored_sum(const Matrix& m, long k, std::optional<std::size_t> anchor0)
{
    Rational total;
    for_each_subset(m.rows(), static_cast<std::size_t>(k), anchor0,
                    [&](std::span<const std::size_t> s) { total += principal_minor(m, s); });
    return total;
}

} // namespace

MinorDescriptor::MinorDescriptor(std::size_t k, std::optional<std::size_t> i, bool subst, std::size_t n)
    : order(k), anchor(i), substituted(subst)
{
    if (k < 1 || k > n) throw DomainError("minor order " + std::to_string(k) + " outside 1.." + std::to_string(n));
    if (anchor) require_anchor(*anchor, n);
    if (substituted && !anchor) throw DomainError("a substituted minor sum needs an anchor column");
}

void for_each_subset(std::size_t n, std::size_t k, std::optional<std::size_t> required,
                     const std::function<void(std::span<const std::size_t>)>& visit)
{
    if (k > n) return;
    if (required && *required >= n) return;
    if (k == 0) {
        if (!required) visit({});
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    while (true) {
        bool contains = !required;
        if (required) {
            for (std::size_t x : idx) {
                if (x == *required) {
                    contains = true;
                    break;
                }
            }
        }
        if (contains) visit(idx);
        // Advance to the next combination in lexicographic order.
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Rational delta_k(const Matrix& m, long k)
{
    require_square(m);
    if (k < 0) throw DomainError("delta_k: negative order");
    if (k == 0) return Rational(1);
    if (static_cast<std::size_t>(k) > m.rows()) return Rational(0);
    return anchored_sum(m, k, std::nullopt);
}

Rational delta_k_anchored(const Matrix& m, long k, std::size_t i)
{
    require_square(m);
    require_anchor(i, m.rows());
    if (k < 1) throw DomainError("delta_k^i: order must be at least 1");
    if (static_cast<std::size_t>(k) > m.rows()) return Rational(0);
    return anchored_sum(m, k, i - 1);
}

Rational delta_k_i(const Matrix& m, long k, std::size_t i, std::span<const Rational> v)
{
    require_square(m);
    require_anchor(i, m.rows());
    if (v.size() != m.rows()) throw DimensionError("delta_k^i: column length mismatch");
    if (k < 1) throw DomainError("delta_k^i: order must be at least 1");
    if (static_cast<std::size_t>(k) > m.rows()) return Rational(0);
    return delta_k_anchored(column_substitute(m, i, v), k, i);
}

Column delta_vec(const Matrix& m, long k, std::span<const Rational> v)
{
    require_square(m);
    Column out(m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) out[i - 1] = delta_k_i(m, k, i, v);
    return out;
}

} // namespace totred
