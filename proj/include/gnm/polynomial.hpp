#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gnm/rational.hpp"

namespace gnm {

/// Dense univariate polynomial over Q in the variable λ, coefficients in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial lambda() { return monomial(1, 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of λ^k (zero beyond the degree).
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// Multiplicity of λ = 0 as a root (0 for the zero polynomial).
  [[nodiscard]] std::size_t low_order() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;

  [[nodiscard]] Polynomial monic() const;
  /// p(λ + shift), via repeated synthetic division.
  [[nodiscard]] Polynomial taylor_shift(const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q·b + r with deg r < deg b. Throws on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Human-readable form in descending powers, e.g. "λ²−1" or "(2/3)λ³+λ".
std::string to_display(const Polynomial& p, std::string_view var = "λ");

}  // namespace gnm
