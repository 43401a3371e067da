#pragma once

#include <cstddef>
#include <vector>

#include "gnm/moment_sequence.hpp"
#include "gnm/rational_function.hpp"

namespace gnm {

/// c₀ + c₁/λ + … + c_K/λ^K.
struct LaurentExpansion {
  std::vector<Rational> coeffs;
  [[nodiscard]] std::size_t order() const { return coeffs.size() - 1; }
};

/// First K+1 coefficients of a proper φ at infinity. Throws ImproperFunction.
LaurentExpansion laurent_expand(const RationalFunction& phi, std::size_t K);

/// s_j = −c_{j+1} for j = 0…ℓ. Throws NonzeroConstantTerm when c₀ ≠ 0 and
/// InvalidArgument when the expansion is too short.
MomentSequence moments_from_expansion(const LaurentExpansion& e, std::size_t ell);

/// Power-series quotient a/b truncated to `terms` coefficients; b₀ ≠ 0.
std::vector<Rational> series_divide(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b, std::size_t terms);

}  // namespace gnm
