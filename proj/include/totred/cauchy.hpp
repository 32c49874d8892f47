#pragma once

#include "totred/operators.hpp"
#include "totred/reduction.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace totred {

/// The first-order system with x(t0) = x0, checked over horizon time points.
struct CauchyProblem {
    Matrix b;
    ElementColumn phi;
    OperatorKind kind = OperatorKind::shift;
    long t0 = 0;
    Column x0;
    std::size_t horizon = 0;

    /// Throws DimensionError / HorizonError on inconsistent data; horizon must be >= n + 1.
    void validate() const;
};

/// x(t+1) = B x(t) + phi(t) from x(t0) = x0. Returns n sequences at origin t0 with steps + 1 values.
ElementColumn iterate_difference(const Matrix& b, const ElementColumn& phi, std::span<const Rational> x0, long t0,
                                 std::size_t steps);

/// (A^j x_i)(t0) = [B^j x0]_i + sum_{k<j} [B^{j-1-k} (A^k phi)(t0)]_i for 1 <= j <= n-1, 1-based i.
Rational derived_initial_conditions(const Matrix& b, const ElementColumn& phi, OperatorKind kind,
                                    std::span<const Rational> x0, long t0, std::size_t i, std::size_t j);

/// phi := A(x) - B x, so that (x, phi) solves the first-order system by construction.
ElementColumn manufacture_solution(const Matrix& b, const ElementColumn& x, OperatorKind kind);

struct VariableResidual {
    std::size_t variable = 1;
    OperatorElement residual;
    std::optional<Window> window; // set for sequences
    bool zero = false;
};

struct VerificationReport {
    ReducedSystem reduced;
    std::vector<VariableResidual> residuals;
    bool route_agreement = true; // false only if the minor route was run and disagreed
    bool routes_checked = false;
    bool passed() const;
};

/// Reduce (B, phi, A) and evaluate Delta_B(A)(x_i) - psi_i for every variable.
/** With check_routes the minor route is recomputed and compared. */
VerificationReport verify_total_reduction(const Matrix& b, const ElementColumn& x, const ElementColumn& phi,
                                          OperatorKind kind, bool check_routes = true);

struct InitialConditionCheck {
    std::size_t variable = 1; // i
    std::size_t order = 1;    // j
    Rational derived;
    Rational observed;
    bool matches() const { return derived == observed; }
};

struct CauchySolution {
    ElementColumn trajectories;
    std::vector<InitialConditionCheck> initial_conditions;
    VerificationReport verification;
    bool passed() const;
};

/// Iterate the difference system over the horizon, then check the reduced equations and derived conditions.
CauchySolution solve_difference_cauchy(const CauchyProblem& problem, bool check_routes = true);

} // namespace totred
