#include "totred/cli/oracle_suite.hpp"

#include "totred/faddeev.hpp"
#include "totred/minors.hpp"
#include "totred/reduction.hpp"

#include <algorithm>

namespace totred::cli {

Rational RationalSampler::next()
{
    const long num = integer(-bound_, bound_);
    const long den = integer(1, bound_);
    return Rational(num, den);
}

long RationalSampler::integer(long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
}

Matrix RationalSampler::matrix(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = next();
    }
    return m;
}

Column RationalSampler::column(std::size_t n)
{
    Column v(n);
    for (auto& x : v) x = next();
    return v;
}

bool OracleSummary::passed() const
{
    return std::all_of(identities.begin(), identities.end(), [](const IdentityTally& t) { return t.passed(); });
}

OracleSummary run_oracle_suite(const OracleOptions& options)
{
    OracleSummary summary{options, {{"lemma1"}, {"lemma2"}, {"char_poly_routes"}, {"cayley_hamilton"}}};
    IdentityTally& lemma1 = summary.identities[0];
    IdentityTally& lemma2 = summary.identities[1];
    IdentityTally& routes = summary.identities[2];
    IdentityTally& termination = summary.identities[3];

    auto tally = [](IdentityTally& t, bool ok) {
        ++t.checked;
        if (!ok) ++t.failed;
    };

    RationalSampler sampler(options.seed);
    const std::size_t span = options.nmax - options.nmin + 1;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const std::size_t n = options.nmin + trial % span;
        const Matrix b = sampler.matrix(n);
        const AdjugateCoeffs ac(b);
        const long nn = static_cast<long>(n);

        tally(routes, ac.char_poly() == char_poly_by_minors(b));
        tally(termination, ac.termination_residual().is_zero());

        for (std::size_t c = 0; c < options.columns_per_matrix; ++c) {
            const Column v = sampler.column(n);
            for (long k = 1; k <= nn; ++k) tally(lemma1, lemma1_check(b, k, v));
            for (long k = 0; k < nn; ++k) {
                if (options.inject_fault) {
                    const Column lhs = mat_vec(ac[static_cast<std::size_t>(k)], v);
                    tally(lemma2, lhs == column_scale(delta_vec(b, k + 1, v), sign_power(k + 1)));
                } else {
                    tally(lemma2, lemma2_check(ac, k, v));
                }
            }
        }
    }
    return summary;
}

} // namespace totred::cli
