#pragma once

#include "totred/matrix.hpp"

#include <cstddef>
#include <vector>

namespace totred {

/// Monic characteristic polynomial det(lambda I - B) = lambda^n + d_1 lambda^{n-1} + ... + d_n.
class CharPoly {
public:
    explicit CharPoly(std::vector<Rational> d);

    std::size_t degree() const { return d_.size(); }
    /// d_k for 1 <= k <= n; d_0 = 1 by convention.
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return d_; }

    Rational evaluate(const Rational& lambda) const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Rational> d_;
};

/// Coefficients B_0..B_{n-1} of adj(lambda I - B) as a matrix polynomial in lambda.
/**
 * Built by the recurrence B_0 = I, B_k = B_{k-1} B + d_k I, with
 * d_k = -trace(B_{k-1} B) / k. The division by k makes this route valid
 * only in characteristic zero (or characteristic > n).
 */
class AdjugateCoeffs {
public:
    explicit AdjugateCoeffs(const Matrix& b);

    std::size_t dimension() const { return coeffs_.size(); }
    const Matrix& source() const { return source_; }
    const CharPoly& char_poly() const { return char_poly_; }
    const std::vector<Matrix>& coeffs() const { return coeffs_; }
    const Matrix& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// B_{n-1} B + d_n I, which Cayley-Hamilton forces to vanish.
    const Matrix& termination_residual() const { return termination_; }

private:
    Matrix source_;
    std::vector<Matrix> coeffs_;
    CharPoly char_poly_;
    Matrix termination_;
};

/// Trace-formula route.
CharPoly char_poly(const Matrix& b);

/// d_k = (-1)^k delta_k(B) by principal-minor enumeration (exponential; oracle).
CharPoly char_poly_by_minors(const Matrix& b);

AdjugateCoeffs adjugate_coeffs(const Matrix& b);

/// Horner evaluation of sum_j lambda0^{n-1-j} B_j.
Matrix adjugate_at(const AdjugateCoeffs& ac, const Rational& lambda0);

} // namespace totred
