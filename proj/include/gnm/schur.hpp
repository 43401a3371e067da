#pragma once

#include <cstddef>
#include <vector>

#include "gnm/moment_sequence.hpp"
#include "gnm/poly_matrix.hpp"
#include "gnm/polynomial.hpp"

namespace gnm {

/// One reduction −s_{n₁−1}/φ = p + ε·a²·φ₁ with φ₁ carrying `induced`.
struct SchurStep {
  std::size_t gap = 0;
  Polynomial p;
  int eps = 1;
  Rational a_sq = 1;
  /// Length ℓ − 2n₁ + 1, possibly empty; first nonzero entry has modulus 1.
  std::vector<Rational> induced;
};

struct SchurChain {
  std::vector<SchurStep> steps;
  /// Induced sequence after the last step (the input itself for an empty chain).
  std::vector<Rational> residual;
  /// Cumulative normal indices n₁ < … < n_N.
  std::vector<std::size_t> normal_indices;
  /// κ_j = ν₋(S_{n_j−1}).
  std::vector<std::size_t> kappa_offsets;
  /// |first nonzero moment| of the input; the chain acts on s / scale.
  Rational scale = 1;
};

/// Single step on a sequence whose first nonzero entry s_m has m ≤ n.
/// Throws NoNormalIndex otherwise.
SchurStep schur_step(const std::vector<Rational>& s);
SchurStep schur_step(const MomentSequence& s);

/// Runs schur_step while the current induced sequence has a normal index.
SchurChain schur_chain(const MomentSequence& s);

/// Rescaled first- and second-kind polynomials P̃₀…P̃_N, Q̃₀…Q̃_N.
struct PQ {
  std::vector<Polynomial> P;
  std::vector<Polynomial> Q;
};
PQ pq_polynomials(const SchurChain& chain);

/// W̃_{[1,j]}; j = 0 gives the identity. Throws IndexOutOfRange for j > N.
PolyMatrix2x2 resolvent(const SchurChain& chain, std::size_t j);

/// The single-step matrix [[0, −ε], [ε·a², p]].
PolyMatrix2x2 step_matrix(const SchurStep& step);

}  // namespace gnm
