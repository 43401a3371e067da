#include "gnm/toeplitz.hpp"

#include <algorithm>

#include "gnm/errors.hpp"
#include "gnm/laurent.hpp"

namespace gnm {

Matrix UpperToeplitz::to_matrix() const {
  const std::size_t n = first_row.size();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) t(i, j) = first_row[j - i];
  return t;
}

std::vector<Rational> expansion_product(const std::vector<Rational>& c,
                                        const std::vector<Rational>& d) {
  if (c.size() != d.size()) {
    throw MathError(ErrorCode::LengthMismatch, "expansion_product needs equal lengths");
  }
  std::vector<Rational> a(c.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) a[k] += c[i] * d[k - i];
  return a;
}

namespace {

void check_inverter_input(const std::vector<Rational>& s, std::size_t m) {
  if (s.size() < 2 * m + 1) {
    throw MathError(ErrorCode::InvalidArgument, "monic inverter needs ℓ ≥ 2m");
  }
  bool all_zero = true;
  for (std::size_t j = 0; j <= 2 * m; ++j) all_zero = all_zero && s[j] == 0;
  if (all_zero) throw MathError(ErrorCode::NotNormalizable, "sequence vanishes through index 2m");
  for (std::size_t j = 0; j <= m; ++j) {
    if ((j < m && s[j] != 0) || (j == m && s[j] == 0)) {
      throw MathError(ErrorCode::InvalidArgument, "m is not the first nonzero index");
    }
  }
}

// Coefficients q₀…q_{terms−1} of s_m / (s_m + s_{m+1}x + …), reading s_j
// beyond the data from `extra`.
std::vector<Rational> reciprocal_series(const std::vector<Rational>& s, std::size_t m,
                                        std::size_t terms, const Rational& extra) {
  std::vector<Rational> den(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    const std::size_t j = m + k;
    den[k] = j < s.size() ? s[j] : (j == 2 * m + 1 ? extra : Rational(0));
  }
  return series_divide({s[m]}, den, terms);
}

Polynomial polynomial_part(const std::vector<Rational>& q, std::size_t m) {
  std::vector<Rational> p(m + 2);
  for (std::size_t k = 0; k <= m + 1; ++k) p[m + 1 - k] = q[k];
  return Polynomial(std::move(p));
}

}  // namespace

Polynomial monic_inverter(const std::vector<Rational>& s, std::size_t m,
                          const std::optional<Rational>& odd_choice) {
  check_inverter_input(s, m);
  const auto q = reciprocal_series(s, m, m + 2, odd_choice.value_or(0));
  return polynomial_part(q, m);
}

Polynomial monic_inverter(const MomentSequence& s, std::size_t m,
                          const std::optional<Rational>& odd_choice) {
  return monic_inverter(s.entries(), m, odd_choice);
}

ExpansionInverse invert_expansion(const std::vector<Rational>& s, std::size_t m) {
  check_inverter_input(s, m);
  const std::size_t ell = s.size() - 1;
  ExpansionInverse out;
  out.eps = sign(s[m]);
  const std::size_t terms = std::max(m + 2, ell - m + 1);
  const auto q = reciprocal_series(s, m, terms, 0);
  out.p = polynomial_part(q, m);
  if (ell == 2 * m) {
    out.regime = InversionRegime::EvenE;
  } else if (ell == 2 * m + 1) {
    out.regime = InversionRegime::OddO;
  } else {
    out.regime = InversionRegime::Tail;
    std::vector<Rational> tail(ell - 2 * m - 1);
    for (std::size_t j = 0; j < tail.size(); ++j) tail[j] = -out.eps * q[m + 2 + j];
    out.tail = std::move(tail);
  }
  return out;
}

ExpansionInverse invert_expansion(const MomentSequence& s, std::size_t m) {
  return invert_expansion(s.entries(), m);
}

}  // namespace gnm
