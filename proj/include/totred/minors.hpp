#pragma once

#include "totred/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace totred {

/// Which principal-minor sum a quantity refers to.
/**
 * order is k. When anchor is set (1-based column i), only index subsets
 * containing i participate; substituted records whether column i was
 * replaced by a vector before the minors were taken.
 */
struct MinorDescriptor {
    std::size_t order = 1;
    std::optional<std::size_t> anchor;
    bool substituted = false;

    MinorDescriptor() = default;
    MinorDescriptor(std::size_t k, std::optional<std::size_t> i, bool subst, std::size_t n);

    friend bool operator==(const MinorDescriptor&, const MinorDescriptor&) = default;
};

/// Visit every k-subset of {0..n-1} in lexicographic order.
/**
 * When required is set (0-based), only subsets containing it are visited.
 * The span passed to the visitor is sorted ascending and only valid during
 * the call.
 */
void for_each_subset(std::size_t n, std::size_t k, std::optional<std::size_t> required,
                     const std::function<void(std::span<const std::size_t>)>& visit);

/// delta_k(M): sum of all order-k principal minors.
/** delta_0 = 1 and delta_k = 0 for k > n. Negative k throws DomainError. */
Rational delta_k(const Matrix& m, long k);

/// delta_k^i(M): order-k principal minors of M whose index set contains column i (1-based).
Rational delta_k_anchored(const Matrix& m, long k, std::size_t i);

/// delta_k^i(M; v) = delta_k^i(M^i(v)). Zero for k > n.
Rational delta_k_i(const Matrix& m, long k, std::size_t i, std::span<const Rational> v);

/// The column [delta_k^1(M; v) ... delta_k^n(M; v)]^T.
Column delta_vec(const Matrix& m, long k, std::span<const Rational> v);

} // namespace totred
