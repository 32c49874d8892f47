#include "totred/cli/report.hpp"

#include <sstream>

namespace totred::cli {

namespace {

std::string power_of_a(long power, std::size_t r)
{
    const std::string phi = "φ_" + std::to_string(r);
    if (power == 0) return phi;
    return "A^" + std::to_string(power) + "(" + phi + ")";
}

ordered_json term_to_json(const RhsTerm& t)
{
    ordered_json j;
    j["k"] = t.order;
    j["sign"] = t.sign > 0 ? "+" : "-";
    j["power"] = t.power;
    j["minor"] = t.label();
    j["weights"] = column_to_json(t.weights);
    return j;
}

std::string render_element(const OperatorElement& e)
{
    std::ostringstream os;
    os << e;
    return os.str();
}

std::string render_column(const Column& c)
{
    std::string s = "[";
    for (std::size_t r = 0; r < c.size(); ++r) s += (r == 0 ? "" : ", ") + c[r].to_string();
    return s + "]";
}

std::string render_char_poly(const CharPoly& cp)
{
    const std::size_t n = cp.degree();
    std::string s = "λ^" + std::to_string(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational& d = cp.coeff(k);
        if (d.is_zero()) continue;
        s += d.sign() < 0 ? " - " : " + ";
        s += (d.sign() < 0 ? -d : d).to_string();
        const std::size_t p = n - k;
        if (p == 1) s += "λ";
        if (p > 1) s += "λ^" + std::to_string(p);
    }
    return s;
}

} // namespace

std::string render_reduced_equation(const ReducedSystem& rs, std::size_t i)
{
    const std::size_t n = rs.char_poly.degree();
    const std::string x = "x_" + std::to_string(i);
    auto power = [&](std::size_t p) { return p == 0 ? x : "A^" + std::to_string(p) + "(" + x + ")"; };
    std::string lhs = power(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational& d = rs.char_poly.coeff(k);
        if (d.is_zero()) continue;
        lhs += d.sign() < 0 ? " - " : " + ";
        lhs += (d.sign() < 0 ? -d : d).to_string() + "·" + power(n - k);
    }
    std::string rhs;
    for (const auto& t : rs.rhs_symbolic[i - 1]) {
        // Fold the term sign into the weights.
        RhsTerm folded = t;
        if (t.sign < 0) {
            for (auto& w : folded.weights) w = -w;
        }
        const std::string signed_e = expand_term(folded);
        if (signed_e == "0") continue;
        if (rhs.empty()) {
            rhs = signed_e;
        } else if (signed_e.front() == '-') {
            rhs += " - " + signed_e.substr(1);
        } else {
            rhs += " + " + signed_e;
        }
    }
    return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

std::string expand_term(const RhsTerm& term)
{
    std::string s;
    for (std::size_t r = 0; r < term.weights.size(); ++r) {
        const Rational& w = term.weights[r];
        if (w.is_zero()) continue;
        const bool negative = w.sign() < 0;
        s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        s += (negative ? -w : w).to_string() + "·" + power_of_a(term.power, r + 1);
    }
    return s.empty() ? "0" : s;
}

ordered_json report_to_json(const Report& report)
{
    ordered_json j;
    j["command"] = report.command;
    j["n"] = report.n;
    j["operator"] = std::string(to_string(report.kind));
    if (report.reduced) {
        const ReducedSystem& rs = *report.reduced;
        j["char_poly"] = column_to_json(rs.char_poly.coeffs());
        ordered_json rhs = ordered_json::array();
        for (std::size_t i = 0; i < rs.rhs_symbolic.size(); ++i) {
            ordered_json var;
            var["variable"] = i + 1;
            ordered_json terms = ordered_json::array();
            for (const auto& t : rs.rhs_symbolic[i]) terms.push_back(term_to_json(t));
            var["terms"] = std::move(terms);
            var["evaluated"] = element_to_json(rs.rhs_evaluated[i]);
            rhs.push_back(std::move(var));
        }
        j["rhs"] = std::move(rhs);
    }
    j["route_agreement"] = report.route_agreement;
    if (report.verification) {
        ordered_json ver = ordered_json::array();
        for (const auto& r : report.verification->residuals) {
            ordered_json v;
            v["variable"] = r.variable;
            v["status"] = r.zero ? "zero" : "nonzero";
            if (r.window) v["window"] = ordered_json::array({r.window->first, r.window->last});
            v["residual"] = element_to_json(r.residual);
            ver.push_back(std::move(v));
        }
        j["verification"] = std::move(ver);
    }
    if (report.first_order_residual_zero) j["first_order_residual_zero"] = *report.first_order_residual_zero;
    if (report.cauchy) {
        ordered_json traj = ordered_json::array();
        for (const auto& e : report.cauchy->trajectories) traj.push_back(element_to_json(e));
        j["trajectories"] = std::move(traj);
        ordered_json ics = ordered_json::array();
        for (const auto& c : report.cauchy->initial_conditions) {
            ordered_json ic;
            ic["variable"] = c.variable;
            ic["j"] = c.order;
            ic["derived"] = c.derived.to_string();
            ic["observed"] = c.observed.to_string();
            ic["match"] = c.matches();
            ics.push_back(std::move(ic));
        }
        j["initial_conditions"] = std::move(ics);
    }
    if (report.cramer) {
        ordered_json c;
        c["det"] = report.cramer->determinant.to_string();
        c["solution"] = column_to_json(report.cramer->solution);
        c["pipeline_solution"] = column_to_json(report.cramer->pipeline_solution);
        c["residual_zero"] = report.cramer->residual_zero;
        j["cramer"] = std::move(c);
    }
    return j;
}

std::string report_to_text(const Report& report)
{
    std::ostringstream os;
    os << report.command << ": n = " << report.n << ", operator = " << to_string(report.kind) << '\n';
    if (report.reduced) {
        const ReducedSystem& rs = *report.reduced;
        os << "Δ_B(λ) = " << render_char_poly(rs.char_poly) << '\n';
        for (std::size_t k = 1; k <= rs.char_poly.degree(); ++k) os << "  d_" << k << " = " << rs.char_poly.coeff(k) << '\n';
        for (std::size_t i = 0; i < rs.rhs_symbolic.size(); ++i) {
            os << render_reduced_equation(rs, i + 1) << '\n';
            os << "Δ_B(A)(x_" << i + 1 << ") =";
            for (const auto& t : rs.rhs_symbolic[i]) os << ' ' << (t.sign > 0 ? '+' : '-') << ' ' << t.label();
            os << '\n';
            for (const auto& t : rs.rhs_symbolic[i]) {
                os << "    " << (t.sign > 0 ? '+' : '-') << ' ' << t.label() << " = " << expand_term(t) << '\n';
            }
            os << "    ψ_" << i + 1 << " = " << render_element(rs.rhs_evaluated[i]) << '\n';
        }
    }
    os << "route agreement: " << (report.route_agreement ? "yes" : "NO") << '\n';
    if (report.first_order_residual_zero) {
        os << "first-order system satisfied: " << (*report.first_order_residual_zero ? "yes" : "NO") << '\n';
    }
    if (report.cauchy) {
        for (std::size_t i = 0; i < report.cauchy->trajectories.size(); ++i) {
            os << "x_" << i + 1 << " = " << render_element(report.cauchy->trajectories[i]) << '\n';
        }
        for (const auto& c : report.cauchy->initial_conditions) {
            os << "(A^" << c.order << " x_" << c.variable << ")(t0) = " << c.derived << " (trajectory " << c.observed
               << ", " << (c.matches() ? "match" : "MISMATCH") << ")\n";
        }
    }
    if (report.verification) {
        for (const auto& r : report.verification->residuals) {
            os << "residual x_" << r.variable << ": " << (r.zero ? "zero" : "NONZERO");
            if (r.window) os << " on [" << r.window->first << ", " << r.window->last << "]";
            if (!r.zero) os << ' ' << render_element(r.residual);
            os << '\n';
        }
    }
    if (report.cramer) {
        os << "det(B) = " << report.cramer->determinant << '\n';
        os << "x = " << render_column(report.cramer->solution) << '\n';
        os << "x (reduction, A = 0) = " << render_column(report.cramer->pipeline_solution) << '\n';
        os << "B x + φ = 0: " << (report.cramer->residual_zero ? "yes" : "NO") << '\n';
    }
    return os.str();
}

ordered_json oracle_to_json(const OracleSummary& summary)
{
    ordered_json j;
    j["command"] = "oracle";
    j["seed"] = summary.options.seed;
    j["nmin"] = summary.options.nmin;
    j["nmax"] = summary.options.nmax;
    j["trials"] = summary.options.trials;
    ordered_json ids = ordered_json::array();
    for (const auto& t : summary.identities) {
        ordered_json id;
        id["identity"] = t.name;
        id["checked"] = t.checked;
        id["failed"] = t.failed;
        id["status"] = t.passed() ? "pass" : "fail";
        ids.push_back(std::move(id));
    }
    j["identities"] = std::move(ids);
    j["passed"] = summary.passed();
    return j;
}

std::string oracle_to_text(const OracleSummary& summary)
{
    std::ostringstream os;
    os << "oracle: n " << summary.options.nmin << ".." << summary.options.nmax << ", " << summary.options.trials
       << " trials, seed " << summary.options.seed << '\n';
    for (const auto& t : summary.identities) {
        os << "  " << (t.passed() ? "PASS " : "FAIL ") << t.name << "  (" << t.checked << " checks, " << t.failed
           << " failed)\n";
    }
    os << (summary.passed() ? "all identities hold\n" : "identity suite FAILED\n");
    return os.str();
}

} // namespace totred::cli
