#include "totred/faddeev.hpp"

#include "totred/errors.hpp"
#include "totred/minors.hpp"

#include <utility>

namespace totred {

namespace {

std::vector<Rational> placeholder_coeffs(const Matrix& b)
{
    if (!b.is_square() || b.rows() == 0) throw DimensionError("characteristic polynomial needs a square matrix, n >= 1");
    return std::vector<Rational>(b.rows());
}

Matrix add_scaled_identity(Matrix m, const Rational& s)
{
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += s;
    return m;
}

} // namespace

CharPoly::CharPoly(std::vector<Rational> d) : d_(std::move(d))
{
    if (d_.empty()) throw DimensionError("characteristic polynomial of degree 0");
}

const Rational& CharPoly::coeff(std::size_t k) const
{
    static const Rational one(1);
    if (k == 0) return one;
    if (k > d_.size()) throw IndexError("characteristic polynomial coefficient index out of range");
    return d_[k - 1];
}

Rational CharPoly::evaluate(const Rational& lambda) const
{
    Rational acc(1);
    for (const auto& c : d_) acc = acc * lambda + c;
    return acc;
}

AdjugateCoeffs::AdjugateCoeffs(const Matrix& b) : source_(b), char_poly_(placeholder_coeffs(b))
{
    const std::size_t n = b.rows();
    std::vector<Rational> d(n);
    coeffs_.reserve(n);
    coeffs_.push_back(Matrix::identity(n));
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix product = mat_mul(coeffs_.back(), b);
        d[k - 1] = -product.trace() / Rational(static_cast<long>(k));
        Matrix next = add_scaled_identity(std::move(product), d[k - 1]);
        if (k < n) {
            coeffs_.push_back(std::move(next));
        } else {
            termination_ = std::move(next);
        }
    }
    char_poly_ = CharPoly(std::move(d));
}

CharPoly char_poly(const Matrix& b) { return AdjugateCoeffs(b).char_poly(); }

CharPoly char_poly_by_minors(const Matrix& b)
{
    std::vector<Rational> d = placeholder_coeffs(b);
    for (std::size_t k = 1; k <= b.rows(); ++k) {
        const long kk = static_cast<long>(k);
        d[k - 1] = sign_power(kk) * delta_k(b, kk);
    }
    return CharPoly(std::move(d));
}

AdjugateCoeffs adjugate_coeffs(const Matrix& b) { return AdjugateCoeffs(b); }

Matrix adjugate_at(const AdjugateCoeffs& ac, const Rational& lambda0)
{
    Matrix acc = ac[0];
    for (std::size_t j = 1; j < ac.dimension(); ++j) acc = mat_add(mat_scale(acc, lambda0), ac[j]);
    return acc;
}

} // namespace totred
