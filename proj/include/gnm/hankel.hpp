#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gnm/matrix.hpp"
#include "gnm/moment_sequence.hpp"

namespace gnm {

struct Inertia {
  std::size_t nu_plus = 0;
  std::size_t nu_zero = 0;
  std::size_t nu_minus = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// S_k = (s_{i+j})_{i,j=0..k}; requires 2k ≤ ℓ.
Matrix hankel_matrix(const std::vector<Rational>& s, std::size_t k);
Matrix hankel_matrix(const MomentSequence& s, std::size_t k);

/// Signature of a symmetric matrix by congruence elimination with 1×1 and
/// 2×2 pivots.
Inertia inertia(const Matrix& symmetric);

/// det S_0, …, det S_n.
std::vector<Rational> leading_minors(const MomentSequence& s);

/// All j in 1…n+1 with det S_{j−1} ≠ 0, increasing.
std::vector<std::size_t> normal_indices(const MomentSequence& s);

/// Hankel rank of (s, 2n): n+1 if S_n is invertible, else the largest normal
/// index, 0 when there is none.
std::size_t hankel_rank(const MomentSequence& s);

struct RecursionResult {
  bool flag = false;
  std::optional<std::vector<Rational>> alphas;
};

/// Tests s_j = α₀ s_{j−r} + … + α_{r−1} s_{j−1} for r ≤ j ≤ ℓ with r the
/// Hankel rank. When r = n+1 and ℓ = 2n the missing s_{2n+1} is taken as 0.
RecursionResult recursive_generation(const MomentSequence& s);

struct ExtensionResult {
  bool exists = false;
  std::optional<std::pair<Rational, Rational>> witness;
};

/// Continues the recursion to produce (s_{2n+1}, s_{2n+2}) with
/// ν₋(S_{n+1}) = ν₋(S_n). For odd ℓ the given s_{2n+1} is kept and must
/// itself fit the recursion.
ExtensionResult extend_preserving_inertia(const MomentSequence& s);

}  // namespace gnm
