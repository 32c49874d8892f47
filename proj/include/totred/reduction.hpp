#pragma once

#include "totred/faddeev.hpp"
#include "totred/minors.hpp"
#include "totred/operators.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace totred {

enum class Route { adjugate, minors };

std::string_view to_string(Route route);

/// One summand (-1)^{k-1} delta_k^i(B; A^{n-k} phi) of the reduced right-hand side for x_i.
/**
 * weights expands the substituted minor sum as a linear form in the entries
 * of the substituted column: delta_k^i(B; w) = sum_r weights[r] * w_r.
 * The sign is kept separate so the term reads like the formula.
 */
struct RhsTerm {
    std::size_t order = 1;    // k
    int sign = 1;             // (-1)^{k-1}
    std::size_t variable = 1; // i, 1-based
    long power = 0;           // n - k
    MinorDescriptor descriptor;
    std::vector<Rational> weights;

    /// "δ_k^i(B; A^{n-k}φ)"
    std::string label() const;

    friend bool operator==(const RhsTerm&, const RhsTerm&) = default;
};

/// n decoupled equations Delta_B(A)(x_i) = psi_i sharing one characteristic polynomial.
struct ReducedSystem {
    CharPoly char_poly;
    std::vector<std::vector<RhsTerm>> rhs_symbolic; // n terms per variable, zero terms kept
    ElementColumn rhs_evaluated;                    // psi
    Route provenance = Route::adjugate;
};

/// Coefficients of delta_k^i(B; w) as a linear form in w, by expanding every
/// order-k principal minor containing column i along that column.
std::vector<Rational> substituted_minor_weights(const Matrix& b, std::size_t k, std::size_t i);

/// delta_k^i(B; w) for a column of operator elements.
OperatorElement delta_k_i_elements(const Matrix& b, std::size_t k, std::size_t i, const ElementColumn& w);

/// psi_i = sum_k (-1)^{k-1} delta_k^i(B; A^{n-k} phi); characteristic polynomial from minor sums.
ReducedSystem total_reduce_minors(const Matrix& b, const ElementColumn& phi, OperatorKind kind);

/// psi = sum_k B_{k-1} A^{n-k}(phi); characteristic polynomial from the trace recurrence.
ReducedSystem total_reduce_adjugate(const Matrix& b, const ElementColumn& phi, OperatorKind kind);
ReducedSystem total_reduce_adjugate(const AdjugateCoeffs& ac, const ElementColumn& phi, OperatorKind kind);

/// Same characteristic polynomial, symbolic terms and evaluated right-hand side.
bool routes_agree(const ReducedSystem& a, const ReducedSystem& b);

/// Solution of B x + phi = 0 by x_i = -det(B^i(phi)) / det(B). Throws SingularMatrixError.
Column cramer_solve(const Matrix& b, std::span<const Rational> phi);

/// Same solution read off the zero-operator reduction d_n x_i = psi_i.
Column cramer_via_reduction(const Matrix& b, std::span<const Rational> phi);

/// delta_vec(B, k, Bv) + delta_vec(B, k+1, v) == delta_k(B) v, for 1 <= k <= n.
bool lemma1_check(const Matrix& b, long k, std::span<const Rational> v);

/// B_k v == (-1)^k delta_vec(B, k+1, v), for 0 <= k <= n-1.
bool lemma2_check(const Matrix& b, long k, std::span<const Rational> v);
bool lemma2_check(const AdjugateCoeffs& ac, long k, std::span<const Rational> v);

} // namespace totred
