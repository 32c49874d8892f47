#include "totred/cli/app.hpp"

#include "totred/cauchy.hpp"
#include "totred/cli/oracle_suite.hpp"
#include "totred/cli/report.hpp"
#include "totred/cli/spec_io.hpp"
#include "totred/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace totred::cli {

namespace {

struct Options {
    std::string spec;
    std::string out = "stdout";
    std::string format = "text";
    std::uint64_t seed = OracleOptions{}.seed;
    std::size_t trials = OracleOptions{}.trials;
    std::size_t nmin = OracleOptions{}.nmin;
    std::size_t nmax = OracleOptions{}.nmax;
    std::size_t cap = OracleOptions{}.cap;
    std::optional<std::size_t> horizon;
    bool inject_fault = false;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& body, std::ostream& out)
{
    if (opt.out == "stdout" || opt.out == "-") {
        out << body;
        return;
    }
    std::ofstream file(opt.out);
    if (!file) throw InputError("cannot write output file '" + opt.out + "'");
    file << body;
}

void emit_report(const Options& opt, const Report& report, std::ostream& out)
{
    emit(opt, opt.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report), out);
}

void require_cap(const SystemSpec& spec, const Options& opt)
{
    if (spec.n > opt.cap) {
        throw InputError("n = " + std::to_string(spec.n) + " exceeds the brute-force cap " + std::to_string(opt.cap) +
                         " (raise it with --cap)");
    }
}

Report base_report(const char* command, const SystemSpec& spec)
{
    Report r;
    r.command = command;
    r.n = spec.n;
    r.kind = spec.kind;
    return r;
}

int cmd_reduce(const Options& opt, std::ostream& out)
{
    const SystemSpec spec = load_spec(opt.spec);
    require_cap(spec, opt);
    Report report = base_report("reduce", spec);
    ReducedSystem adj = total_reduce_adjugate(spec.matrix, spec.phi, spec.kind);
    report.route_agreement = routes_agree(adj, total_reduce_minors(spec.matrix, spec.phi, spec.kind));
    report.reduced = std::move(adj);
    emit_report(opt, report, out);
    return report.route_agreement ? exit_ok : exit_identity_failure;
}

std::size_t solve_horizon(const SystemSpec& spec, const Options& opt)
{
    if (opt.horizon) return *opt.horizon;
    if (spec.horizon) return *spec.horizon;
    return spec.phi[0].horizon() + 1;
}

int cmd_solve(const Options& opt, std::ostream& out)
{
    const SystemSpec spec = load_spec(opt.spec);
    require_cap(spec, opt);
    if (spec.kind != OperatorKind::shift) throw InputError("solve needs \"operator\": \"shift\"");
    if (!spec.initial) throw InputError("solve needs an \"initial\" block with t0 and x0");
    if (!spec.phi[0].is_sequence()) throw InputError("solve needs sequence elements in phi");
    CauchyProblem problem{spec.matrix, spec.phi, spec.kind, spec.initial->t0, spec.initial->x0, solve_horizon(spec, opt)};
    CauchySolution sol = solve_difference_cauchy(problem);
    Report report = base_report("solve", spec);
    report.reduced = sol.verification.reduced;
    report.route_agreement = sol.verification.route_agreement;
    report.verification = sol.verification;
    const bool ok = sol.passed();
    report.cauchy = std::move(sol);
    emit_report(opt, report, out);
    return ok ? exit_ok : exit_identity_failure;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    const SystemSpec spec = load_spec(opt.spec);
    require_cap(spec, opt);
    ElementColumn x;
    std::optional<CauchySolution> cauchy;
    if (spec.solution) {
        x = *spec.solution;
    } else if (spec.initial && spec.kind == OperatorKind::shift && spec.phi[0].is_sequence()) {
        CauchyProblem problem{spec.matrix, spec.phi, spec.kind, spec.initial->t0, spec.initial->x0,
                              solve_horizon(spec, opt)};
        cauchy = solve_difference_cauchy(problem);
        x = cauchy->trajectories;
    } else {
        throw InputError("verify needs a \"solution\" column, or shift sequences with an \"initial\" block");
    }
    Report report = base_report("verify", spec);
    VerificationReport ver = verify_total_reduction(spec.matrix, x, spec.phi, spec.kind);
    const ElementColumn first_order = column_sub(manufacture_solution(spec.matrix, x, spec.kind), spec.phi);
    bool system_ok = true;
    for (const auto& e : first_order) system_ok = system_ok && e.is_zero();
    report.first_order_residual_zero = system_ok;
    report.route_agreement = ver.route_agreement;
    report.reduced = ver.reduced;
    const bool ok = ver.passed() && system_ok && (!cauchy || cauchy->passed());
    report.verification = std::move(ver);
    report.cauchy = std::move(cauchy);
    emit_report(opt, report, out);
    return ok ? exit_ok : exit_identity_failure;
}

int cmd_cramer(const Options& opt, std::ostream& out, std::ostream& err)
{
    const SystemSpec spec = load_spec(opt.spec);
    require_cap(spec, opt);
    if (spec.kind != OperatorKind::zero) throw InputError("cramer needs \"operator\": \"zero\"");
    Column phi;
    for (std::size_t r = 0; r < spec.n; ++r) {
        const OperatorElement& e = spec.phi[r];
        if (!e.is_polynomial() || e.degree() > 0) {
            throw InputError("cramer needs constant phi entries; /phi/" + std::to_string(r) + " is not a constant");
        }
        phi.push_back(e.value_at(Rational(0)));
    }
    const Rational d = det(spec.matrix);
    if (d.is_zero()) {
        err << "error: det(B) = 0; the system matrix is singular and Cramer's rule does not apply\n";
        return exit_singular;
    }
    CramerResult result{d, cramer_solve(spec.matrix, phi), cramer_via_reduction(spec.matrix, phi), false};
    const Column residual = column_add(mat_vec(spec.matrix, result.solution), phi);
    result.residual_zero = std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r.is_zero(); });
    Report report = base_report("cramer", spec);
    const bool ok = result.residual_zero && result.solution == result.pipeline_solution;
    report.route_agreement = result.solution == result.pipeline_solution;
    report.cramer = std::move(result);
    emit_report(opt, report, out);
    return ok ? exit_ok : exit_identity_failure;
}

int cmd_oracle(const Options& opt, std::ostream& out)
{
    if (opt.nmin < 1 || opt.nmin > opt.nmax) throw InputError("need 1 <= --nmin <= --nmax");
    if (opt.nmax > opt.cap) {
        throw InputError("--nmax " + std::to_string(opt.nmax) + " exceeds the brute-force cap " +
                         std::to_string(opt.cap) + " (raise it with --cap)");
    }
    OracleOptions o;
    o.nmin = opt.nmin;
    o.nmax = opt.nmax;
    o.trials = opt.trials;
    o.seed = opt.seed;
    o.cap = opt.cap;
    o.inject_fault = opt.inject_fault;
    const OracleSummary summary = run_oracle_suite(o);
    emit(opt, opt.format == "json" ? oracle_to_json(summary).dump(2) + "\n" : oracle_to_text(summary), out);
    return summary.passed() ? exit_ok : exit_identity_failure;
}

void add_common(CLI::App* sub, Options& opt, bool needs_spec)
{
    auto* spec = sub->add_option("--spec", opt.spec, "System spec file (JSON)");
    if (needs_spec) spec->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "Output path, or stdout");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--trials", opt.trials, "Random trials");
    sub->add_option("--nmin", opt.nmin, "Smallest dimension sampled");
    sub->add_option("--nmax", opt.nmax, "Largest dimension sampled");
    sub->add_option("--cap", opt.cap, "Largest n allowed on brute-force paths");
    sub->add_option("--horizon", opt.horizon, "Trajectory length for solve/verify");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Total reduction of linear systems of first-order operator equations", "totred"};
    app.require_subcommand(1);
    Options opt;

    auto* reduce = app.add_subcommand("reduce", "Print the totally reduced system");
    auto* solve = app.add_subcommand("solve", "Iterate a difference system and check its reduction");
    auto* cramer = app.add_subcommand("cramer", "Solve B x + phi = 0 (operator zero)");
    auto* oracle = app.add_subcommand("oracle", "Randomized identity suite");
    auto* verify = app.add_subcommand("verify", "Check the reduced equations on a given solution");
    for (auto* sub : {reduce, solve, cramer, verify}) add_common(sub, opt, true);
    add_common(oracle, opt, false);
    oracle->add_flag("--inject-fault", opt.inject_fault)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(opt, out);
        if (solve->parsed()) return cmd_solve(opt, out);
        if (cramer->parsed()) return cmd_cramer(opt, out, err);
        if (oracle->parsed()) return cmd_oracle(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const SpecError& e) {
        err << "error: " << opt.spec;
        if (e.line()) err << ':' << *e.line();
        if (!e.field().empty()) err << ": field " << e.field();
        err << ": " << e.what() << '\n';
        return exit_input_error;
    } catch (const SingularMatrixError& e) {
        err << "error: " << e.what() << '\n';
        return exit_singular;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::logic_error& e) {
        // DimensionError, IndexError, DomainError, HeterogeneousColumnError
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const HorizonError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace totred::cli
