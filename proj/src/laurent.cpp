#include "gnm/laurent.hpp"

#include "gnm/errors.hpp"

namespace gnm {

std::vector<Rational> series_divide(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b, std::size_t terms) {
  if (b.empty() || b[0] == 0) {
    throw MathError(ErrorCode::ZeroDenominator, "series divisor has zero constant term");
  }
  std::vector<Rational> q(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = k < a.size() ? a[k] : Rational(0);
    for (std::size_t i = 1; i <= k && i < b.size(); ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

LaurentExpansion laurent_expand(const RationalFunction& phi, std::size_t K) {
  if (!phi.is_proper()) {
    throw MathError(ErrorCode::ImproperFunction, "laurent_expand needs deg num ≤ deg den");
  }
  LaurentExpansion out;
  if (phi.is_zero()) {
    out.coeffs.assign(K + 1, 0);
    return out;
  }
  // With t = 1/λ and d = deg den: φ = (t^d num(1/t)) / (t^d den(1/t)), both
  // power series in t; the denominator's constant term is its leading
  // coefficient.
  const auto& num = phi.num().coefficients();
  const auto& den = phi.den().coefficients();
  const std::size_t d = den.size() - 1;
  std::vector<Rational> a(d + 1), b(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    b[k] = den[d - k];
    if (d - k < num.size()) a[k] = num[d - k];
  }
  out.coeffs = series_divide(a, b, K + 1);
  return out;
}

MomentSequence moments_from_expansion(const LaurentExpansion& e, std::size_t ell) {
  if (e.coeffs.size() < ell + 2) {
    throw MathError(ErrorCode::InvalidArgument, "expansion shorter than ℓ+2 coefficients");
  }
  if (e.coeffs[0] != 0) {
    throw MathError(ErrorCode::NonzeroConstantTerm, "expansion has a nonzero constant term");
  }
  std::vector<Rational> s(ell + 1);
  for (std::size_t j = 0; j <= ell; ++j) s[j] = -e.coeffs[j + 1];
  return MomentSequence(std::move(s));
}

}  // namespace gnm
