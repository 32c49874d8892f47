#include "totred/reduction.hpp"

#include "totred/errors.hpp"

#include <string>

namespace totred {

namespace {

void validate_system(const Matrix& b, const ElementColumn& phi)
{
    if (!b.is_square() || b.rows() == 0) throw DimensionError("system matrix must be square with n >= 1");
    if (phi.size() != b.rows()) {
        throw DimensionError("free column has " + std::to_string(phi.size()) + " entries, expected " +
                             std::to_string(b.rows()));
    }
}

void require_range(long k, long lo, long hi, const char* what)
{
    if (k < lo || k > hi) {
        throw DomainError(std::string(what) + ": k = " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    }
}

RhsTerm make_term(std::size_t k, std::size_t i, std::size_t n, std::vector<Rational> weights)
{
    RhsTerm t;
    t.order = k;
    t.sign = (k % 2 == 1) ? 1 : -1;
    t.variable = i;
    t.power = static_cast<long>(n - k);
    t.descriptor = MinorDescriptor(k, i, true, n);
    t.weights = std::move(weights);
    return t;
}

} // namespace

std::string_view to_string(Route route) { return route == Route::adjugate ? "adjugate" : "minors"; }

std::string RhsTerm::label() const
{
    return "δ_" + std::to_string(order) + "^" + std::to_string(variable) + "(B; A^" + std::to_string(power) + "φ)";
}

std::vector<Rational> substituted_minor_weights(const Matrix& b, std::size_t k, std::size_t i)
{
    const std::size_t n = b.rows();
    if (!b.is_square()) throw DimensionError("substituted minors need a square matrix");
    if (i < 1 || i > n) throw IndexError("anchor column " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (k < 1) throw DomainError("substituted minor order must be at least 1");
    std::vector<Rational> weights(n);
    if (k > n) return weights;
    const std::size_t anchor = i - 1;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for_each_subset(n, k, anchor, [&](std::span<const std::size_t> subset) {
        std::size_t anchor_pos = 0;
        cols.clear();
        for (std::size_t p = 0; p < subset.size(); ++p) {
            if (subset[p] == anchor) {
                anchor_pos = p;
            } else {
                cols.push_back(subset[p]);
            }
        }
        // Entry (r, anchor) of the substituted minor is w_r; its cofactor never touches column i.
        for (std::size_t p = 0; p < subset.size(); ++p) {
            rows.clear();
            for (std::size_t q = 0; q < subset.size(); ++q) {
                if (q != p) rows.push_back(subset[q]);
            }
            Rational cofactor = det(submatrix(b, rows, cols));
            if ((p + anchor_pos) % 2 == 1) cofactor = -cofactor;
            weights[subset[p]] += cofactor;
        }
    });
    return weights;
}

OperatorElement delta_k_i_elements(const Matrix& b, std::size_t k, std::size_t i, const ElementColumn& w)
{
    if (w.size() != b.rows()) throw DimensionError("substituted column length mismatch");
    return lincomb(substituted_minor_weights(b, k, i), w.entries());
}

ReducedSystem total_reduce_minors(const Matrix& b, const ElementColumn& phi, OperatorKind kind)
{
    validate_system(b, phi);
    const std::size_t n = b.rows();
    std::vector<ElementColumn> powers;
    powers.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(apply_vector(kind, phi, static_cast<long>(n - k)));

    std::vector<std::vector<RhsTerm>> symbolic(n);
    std::vector<OperatorElement> psi;
    psi.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::optional<OperatorElement> acc;
        for (std::size_t k = 1; k <= n; ++k) {
            RhsTerm term = make_term(k, i, n, substituted_minor_weights(b, k, i));
            OperatorElement value = lincomb(term.weights, powers[k - 1].entries()).scaled(Rational(term.sign));
            acc = acc ? *acc + value : value;
            symbolic[i - 1].push_back(std::move(term));
        }
        psi.push_back(std::move(*acc));
    }
    return ReducedSystem{char_poly_by_minors(b), std::move(symbolic), ElementColumn(std::move(psi)), Route::minors};
}

ReducedSystem total_reduce_adjugate(const AdjugateCoeffs& ac, const ElementColumn& phi, OperatorKind kind)
{
    const Matrix& b = ac.source();
    validate_system(b, phi);
    const std::size_t n = b.rows();

    std::optional<ElementColumn> psi;
    for (std::size_t k = 1; k <= n; ++k) {
        ElementColumn term = mat_act(ac[k - 1], apply_vector(kind, phi, static_cast<long>(n - k)));
        psi = psi ? column_add(*psi, term) : term;
    }

    // By the adjugate/minor correspondence, delta_k^i(B; v) = (-1)^{k-1} [B_{k-1} v]_i.
    std::vector<std::vector<RhsTerm>> symbolic(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational s = sign_power(static_cast<long>(k - 1));
            std::vector<Rational> weights(n);
            for (std::size_t r = 0; r < n; ++r) weights[r] = s * ac[k - 1](i - 1, r);
            symbolic[i - 1].push_back(make_term(k, i, n, std::move(weights)));
        }
    }
    return ReducedSystem{ac.char_poly(), std::move(symbolic), std::move(*psi), Route::adjugate};
}

ReducedSystem total_reduce_adjugate(const Matrix& b, const ElementColumn& phi, OperatorKind kind)
{
    validate_system(b, phi);
    return total_reduce_adjugate(AdjugateCoeffs(b), phi, kind);
}

bool routes_agree(const ReducedSystem& a, const ReducedSystem& b)
{
    return a.char_poly == b.char_poly && a.rhs_symbolic == b.rhs_symbolic && a.rhs_evaluated == b.rhs_evaluated;
}

Column cramer_solve(const Matrix& b, std::span<const Rational> phi)
{
    if (!b.is_square() || b.rows() == 0) throw DimensionError("Cramer's rule needs a square matrix, n >= 1");
    if (phi.size() != b.rows()) throw DimensionError("Cramer's rule: free column length mismatch");
    const Rational d = det(b);
    if (d.is_zero()) throw SingularMatrixError("det(B) = 0: Cramer's rule does not apply");
    Column x(b.rows());
    for (std::size_t i = 1; i <= b.rows(); ++i) x[i - 1] = -det(column_substitute(b, i, phi)) / d;
    return x;
}

Column cramer_via_reduction(const Matrix& b, std::span<const Rational> phi)
{
    const ReducedSystem rs = total_reduce_minors(b, ElementColumn::constants(phi), OperatorKind::zero);
    // With A = 0 the left-hand side collapses to d_n x_i.
    const Rational& dn = rs.char_poly.coeff(b.rows());
    if (dn.is_zero()) throw SingularMatrixError("det(B) = 0: the reduced equations d_n x_i = psi_i are degenerate");
    Column x(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) x[i] = rs.rhs_evaluated[i].value_at(Rational(0)) / dn;
    return x;
}

bool lemma1_check(const Matrix& b, long k, std::span<const Rational> v)
{
    const long n = static_cast<long>(b.rows());
    require_range(k, 1, n, "lemma1_check");
    const Column lhs = column_add(delta_vec(b, k, mat_vec(b, v)), delta_vec(b, k + 1, v));
    return lhs == column_scale(v, delta_k(b, k));
}

bool lemma2_check(const AdjugateCoeffs& ac, long k, std::span<const Rational> v)
{
    const long n = static_cast<long>(ac.dimension());
    require_range(k, 0, n - 1, "lemma2_check");
    const Column lhs = mat_vec(ac[static_cast<std::size_t>(k)], v);
    return lhs == column_scale(delta_vec(ac.source(), k + 1, v), sign_power(k));
}

bool lemma2_check(const Matrix& b, long k, std::span<const Rational> v) { return lemma2_check(AdjugateCoeffs(b), k, v); }

} // namespace totred
