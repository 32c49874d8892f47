#pragma once

#include "totred/cauchy.hpp"
#include "totred/cli/oracle_suite.hpp"
#include "totred/cli/spec_io.hpp"
#include "totred/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace totred::cli {

struct CramerResult {
    Rational determinant;
    Column solution;          // x_i = -det(B^i(phi)) / det(B)
    Column pipeline_solution; // from d_n x_i = psi_i with A = 0
    bool residual_zero = false; // B x + phi == 0
};

/// Everything a subcommand prints. Fields absent for a subcommand stay empty.
struct Report {
    std::string command;
    std::size_t n = 0;
    OperatorKind kind = OperatorKind::shift;
    std::optional<ReducedSystem> reduced;
    bool route_agreement = true;
    std::optional<VerificationReport> verification;
    std::optional<bool> first_order_residual_zero;
    std::optional<CauchySolution> cauchy;
    std::optional<CramerResult> cramer;
};

ordered_json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

ordered_json oracle_to_json(const OracleSummary& summary);
std::string oracle_to_text(const OracleSummary& summary);

/// "+ 1·A^1(φ_1) - 2·A^1(φ_2)", zero weights omitted; "0" when all vanish.
std::string expand_term(const RhsTerm& term);

/// "A^n(x_i) + d_1·A^{n-1}(x_i) + ... + d_n·x_i = <expanded right-hand side>" (1-based i).
std::string render_reduced_equation(const ReducedSystem& rs, std::size_t i);

} // namespace totred::cli
