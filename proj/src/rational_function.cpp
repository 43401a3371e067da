#include "gnm/rational_function.hpp"

#include "gnm/errors.hpp"

namespace gnm {

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(1)) {}

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) {
    throw MathError(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  }
  if (num.is_zero()) return RationalFunction(Polynomial(), Polynomial::constant(1), 0);
  const Polynomial g = gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;
  const Rational lc = d.leading();
  n *= Rational(1 / lc);
  d *= Rational(1 / lc);
  return RationalFunction(std::move(n), std::move(d), 0);
}

Rational RationalFunction::value_at_infinity() const {
  if (!is_proper()) throw MathError(ErrorCode::ImproperFunction, "function has a pole at infinity");
  if (num_.degree() < den_.degree()) return 0;
  return num_.leading() / den_.leading();
}

std::pair<Polynomial, RationalFunction> RationalFunction::split() const {
  auto [q, r] = divmod(num_, den_);
  return {q, rf_normalize(r, den_)};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = rf_normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = rf_normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = rf_normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw MathError(ErrorCode::ZeroDenominator, "division by the zero function");
  *this = rf_normalize(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.num_, a.den_, 0);
}

}  // namespace gnm
