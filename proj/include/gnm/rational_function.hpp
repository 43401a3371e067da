#pragma once

#include <string>

#include "gnm/polynomial.hpp"

namespace gnm {

/// Reduced ratio num/den of rational polynomials: den monic and gcd(num, den)
/// = 1, so equal functions compare equal structurally. The zero function is
/// stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& p);  // NOLINT: polynomials are rational functions

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  /// deg num ≤ deg den.
  [[nodiscard]] bool is_proper() const { return num_.degree() <= den_.degree(); }
  /// deg num < deg den, i.e. vanishes at infinity (zero counts as strictly proper).
  [[nodiscard]] bool is_strictly_proper() const {
    return is_zero() || num_.degree() < den_.degree();
  }
  /// Value at infinity of a proper function.
  [[nodiscard]] Rational value_at_infinity() const;
  /// Polynomial part and strictly proper remainder: f = poly + rest.
  [[nodiscard]] std::pair<Polynomial, RationalFunction> split() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  friend RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);
  RationalFunction(Polynomial num, Polynomial den, int /*already reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Cancels the gcd and makes the denominator monic. Throws ZeroDenominator.
RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

}  // namespace gnm
