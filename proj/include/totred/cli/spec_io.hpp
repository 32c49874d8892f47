#pragma once

#include "totred/matrix.hpp"
#include "totred/operators.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace totred::cli {

/// A malformed spec file. field is a JSON-pointer-like path; line is set for syntax errors.
class SpecError : public std::runtime_error {
public:
    SpecError(const std::string& message, std::string field, std::optional<std::size_t> line = std::nullopt);

    const std::string& field() const { return field_; }
    std::optional<std::size_t> line() const { return line_; }

private:
    std::string field_;
    std::optional<std::size_t> line_;
};

struct InitialData {
    long t0 = 0;
    Column x0;
};

/// Parsed system A(x) = B x + phi.
/**
 * File layout (JSON, every scalar a rational-literal string):
 *
 *     {
 *       "n": 2,
 *       "matrix": [["1", "2"], ["3", "4"]],
 *       "operator": "shift",
 *       "phi": [{"sequence": ["1", "0", "0"], "origin": 0}, ...],
 *       "initial": {"t0": 0, "x0": ["1", "0"]},
 *       "horizon": 12,
 *       "solution": [...]
 *     }
 *
 * An element is a bare literal (constant polynomial), {"polynomial": [c0, c1, ...]}
 * with ascending coefficients, or {"sequence": [...], "origin": t0}. "initial",
 * "horizon" and "solution" are optional.
 */
struct SystemSpec {
    std::size_t n = 0;
    Matrix matrix;
    OperatorKind kind = OperatorKind::shift;
    ElementColumn phi;
    std::optional<InitialData> initial;
    std::optional<std::size_t> horizon;
    std::optional<ElementColumn> solution;
};

SystemSpec parse_spec(std::string_view text);
SystemSpec load_spec(const std::string& path);

using ordered_json = nlohmann::ordered_json;

ordered_json element_to_json(const OperatorElement& e);
OperatorElement element_from_json(const nlohmann::json& j, const std::string& field);
Rational rational_from_json(const nlohmann::json& j, const std::string& field);
ordered_json column_to_json(const Column& c);

} // namespace totred::cli
