#include "totred/cauchy.hpp"

#include "totred/errors.hpp"

#include <algorithm>
#include <string>

namespace totred {

namespace {

void require_system(const Matrix& b, std::size_t entries, const char* what)
{
    if (!b.is_square() || b.rows() == 0) throw DimensionError(std::string(what) + ": B must be square with n >= 1");
    if (entries != b.rows()) throw DimensionError(std::string(what) + ": column length does not match B");
}

void require_conformable(const ElementColumn& x, const ElementColumn& phi)
{
    if (x.size() != phi.size()) throw DimensionError("solution and free column differ in length");
    if (x.size() == 0) return;
    if (x[0].is_sequence() != phi[0].is_sequence()) {
        throw HeterogeneousColumnError("solution and free column use different element variants");
    }
    if (x[0].is_sequence() && x[0].origin() != phi[0].origin()) {
        throw HeterogeneousColumnError("solution and free column sequences start at different origins");
    }
}

} // namespace

void CauchyProblem::validate() const
{
    require_system(b, phi.size(), "Cauchy problem");
    if (x0.size() != b.rows()) throw DimensionError("Cauchy problem: x0 length does not match B");
    if (horizon < b.rows() + 1) {
        throw HorizonError("Cauchy problem: horizon " + std::to_string(horizon) + " < n + 1 = " +
                           std::to_string(b.rows() + 1));
    }
}

ElementColumn iterate_difference(const Matrix& b, const ElementColumn& phi, std::span<const Rational> x0, long t0,
                                 std::size_t steps)
{
    require_system(b, x0.size(), "iterate_difference");
    if (phi.size() != b.rows()) throw DimensionError("iterate_difference: free column length does not match B");
    if (steps > 0) {
        if (!phi[0].is_sequence()) throw DomainError("iterate_difference needs sequence forcing terms");
        const Window w = phi[0].window();
        const long last_needed = t0 + static_cast<long>(steps) - 1;
        if (w.first > t0 || w.last < last_needed) {
            throw HorizonError("forcing terms cover [" + std::to_string(w.first) + ", " + std::to_string(w.last) +
                               "] but " + std::to_string(steps) + " steps from t0 = " + std::to_string(t0) +
                               " need [" + std::to_string(t0) + ", " + std::to_string(last_needed) + "]");
        }
    }
    const std::size_t n = b.rows();
    std::vector<std::vector<Rational>> traj(n);
    Column x(x0.begin(), x0.end());
    for (std::size_t r = 0; r < n; ++r) traj[r].push_back(x[r]);
    for (std::size_t s = 0; s < steps; ++s) {
        x = column_add(mat_vec(b, x), phi.values_at(Rational(t0 + static_cast<long>(s))));
        for (std::size_t r = 0; r < n; ++r) traj[r].push_back(x[r]);
    }
    std::vector<OperatorElement> out;
    out.reserve(n);
    for (auto& values : traj) out.push_back(OperatorElement::sequence(t0, std::move(values)));
    return ElementColumn(std::move(out));
}

Rational derived_initial_conditions(const Matrix& b, const ElementColumn& phi, OperatorKind kind,
                                    std::span<const Rational> x0, long t0, std::size_t i, std::size_t j)
{
    require_system(b, x0.size(), "derived_initial_conditions");
    if (phi.size() != b.rows()) throw DimensionError("derived_initial_conditions: free column length does not match B");
    const std::size_t n = b.rows();
    if (i < 1 || i > n) throw IndexError("derived_initial_conditions: variable index outside 1..n");
    if (j < 1 || j + 1 > n) {
        throw DomainError("derived_initial_conditions: order j = " + std::to_string(j) + " outside 1.." +
                          std::to_string(n - 1));
    }
    const Rational at(t0);
    Column value = mat_vec(mat_pow(b, static_cast<long>(j)), x0);
    for (std::size_t k = 0; k < j; ++k) {
        const Column forcing = apply_vector(kind, phi, static_cast<long>(k)).values_at(at);
        value = column_add(value, mat_vec(mat_pow(b, static_cast<long>(j - 1 - k)), forcing));
    }
    return value[i - 1];
}

ElementColumn manufacture_solution(const Matrix& b, const ElementColumn& x, OperatorKind kind)
{
    require_system(b, x.size(), "manufacture_solution");
    return column_sub(apply_vector(kind, x, 1), mat_act(b, x));
}

bool VerificationReport::passed() const
{
    return route_agreement &&
           std::all_of(residuals.begin(), residuals.end(), [](const VariableResidual& r) { return r.zero; });
}

VerificationReport verify_total_reduction(const Matrix& b, const ElementColumn& x, const ElementColumn& phi,
                                          OperatorKind kind, bool check_routes)
{
    require_system(b, phi.size(), "verify_total_reduction");
    require_conformable(x, phi);
    VerificationReport report{total_reduce_adjugate(b, phi, kind), {}, true, check_routes};
    if (check_routes) report.route_agreement = routes_agree(report.reduced, total_reduce_minors(b, phi, kind));
    for (std::size_t i = 0; i < x.size(); ++i) {
        OperatorElement res = eval_scalar_equation(report.reduced.char_poly, kind, x[i], report.reduced.rhs_evaluated[i]);
        VariableResidual vr{i + 1, res, std::nullopt, res.is_zero()};
        if (res.is_sequence()) vr.window = res.window();
        report.residuals.push_back(std::move(vr));
    }
    return report;
}

bool CauchySolution::passed() const
{
    return verification.passed() && std::all_of(initial_conditions.begin(), initial_conditions.end(),
                                                 [](const InitialConditionCheck& c) { return c.matches(); });
}

CauchySolution solve_difference_cauchy(const CauchyProblem& problem, bool check_routes)
{
    problem.validate();
    if (problem.kind != OperatorKind::shift) throw DomainError("direct iteration needs the shift operator");
    const std::size_t n = problem.b.rows();
    ElementColumn traj = iterate_difference(problem.b, problem.phi, problem.x0, problem.t0, problem.horizon - 1);
    std::vector<InitialConditionCheck> ics;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            Rational derived =
                derived_initial_conditions(problem.b, problem.phi, problem.kind, problem.x0, problem.t0, i, j);
            Rational observed = traj[i - 1].value_at(Rational(problem.t0 + static_cast<long>(j)));
            ics.push_back(InitialConditionCheck{i, j, std::move(derived), std::move(observed)});
        }
    }
    VerificationReport report = verify_total_reduction(problem.b, traj, problem.phi, problem.kind, check_routes);
    return CauchySolution{std::move(traj), std::move(ics), std::move(report)};
}

} // namespace totred
