#pragma once

#include "totred/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace totred::cli {

/// Seeded generator of small random rationals: numerator in [-bound, bound], denominator in [1, bound].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long bound = 9) : rng_(seed), bound_(bound) {}

    Rational next();
    Matrix matrix(std::size_t n);
    Column column(std::size_t n);
    long integer(long lo, long hi);

private:
    std::mt19937_64 rng_;
    long bound_;
};

struct OracleOptions {
    std::size_t nmin = 1;
    std::size_t nmax = 6;
    std::size_t trials = 200;
    std::size_t columns_per_matrix = 5;
    std::uint64_t seed = 20090701;
    std::size_t cap = 12;
    // Test hook: flips the sign in the adjugate/minor identity so the suite must fail.
    bool inject_fault = false;
};

struct IdentityTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    bool passed() const { return failed == 0; }
};

struct OracleSummary {
    OracleOptions options;
    std::vector<IdentityTally> identities;
    bool passed() const;
};

/// Run lemma1_check, lemma2_check, char-poly route agreement and Cayley-Hamilton termination
/// over trials random matrices with n cycling through nmin..nmax.
OracleSummary run_oracle_suite(const OracleOptions& options);

} // namespace totred::cli
