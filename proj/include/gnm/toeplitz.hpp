#pragma once

#include <optional>
#include <vector>

#include "gnm/matrix.hpp"
#include "gnm/moment_sequence.hpp"
#include "gnm/polynomial.hpp"

namespace gnm {

/// Upper-triangular Toeplitz matrix T(c₀,…,c_n) with t_{ij} = c_{j−i}, i ≤ j.
struct UpperToeplitz {
  std::vector<Rational> first_row;
  [[nodiscard]] Matrix to_matrix() const;
};

/// First row of T(c)·T(d): the Cauchy product truncated to len(c) terms.
/// Throws LengthMismatch.
std::vector<Rational> expansion_product(const std::vector<Rational>& c,
                                        const std::vector<Rational>& d);

/// Monic p of degree m+1 with T(p_{m+1},…,p₁)·T(s_m,…,s_{2m}) = s_m·I, its
/// constant term fixed by s_{2m+1} (taken from `odd_choice`, default 0, when
/// ℓ = 2m). Requires s_j = 0 for j < m, s_m ≠ 0 and ℓ ≥ 2m.
Polynomial monic_inverter(const std::vector<Rational>& s, std::size_t m,
                          const std::optional<Rational>& odd_choice = std::nullopt);
Polynomial monic_inverter(const MomentSequence& s, std::size_t m,
                          const std::optional<Rational>& odd_choice = std::nullopt);

enum class InversionRegime { EvenE, OddO, Tail };

struct ExpansionInverse {
  Polynomial p;
  int eps = 1;
  InversionRegime regime = InversionRegime::EvenE;
  /// Unnormalized tail ŝ₀…ŝ_{ℓ−2m−2}; present only for the Tail regime.
  std::optional<std::vector<Rational>> tail;
};

/// Splits −s_m/φ = p(λ) + ε·(−Σ ŝ_j λ^{−j−1}) for φ with moments s.
ExpansionInverse invert_expansion(const std::vector<Rational>& s, std::size_t m);
ExpansionInverse invert_expansion(const MomentSequence& s, std::size_t m);

}  // namespace gnm
