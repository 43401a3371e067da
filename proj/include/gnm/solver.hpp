#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gnm/hankel.hpp"
#include "gnm/moment_sequence.hpp"
#include "gnm/poly_matrix.hpp"
#include "gnm/rational_function.hpp"
#include "gnm/schur.hpp"

namespace gnm {

enum class ProblemKind { MP, IP };

struct ProblemInstance {
  MomentSequence s;
  std::size_t kappa = 0;
  ProblemKind kind = ProblemKind::MP;
};

enum class Category { Nondegenerate, DegenerateA, DegenerateB, Zero };

struct Classification {
  Category category = Category::Zero;
  Inertia inertia;  // of S_n
  std::vector<std::size_t> normal_indices;
  std::size_t hankel_rank = 0;
  std::vector<Rational> residual;
  /// First nonzero index of the residual (case B only).
  std::optional<std::size_t> m_res;
  std::size_t nu0 = 0;
  SchurChain chain;
};

enum class Status { Unsolvable, Unique, Parametrized };

enum class Reason {
  OkUnique,
  OkParametrized,
  KappaTooSmall,
  GapRegime,
  NotRecursivelyGenerated,
  OddTrailingNonzero,
};

enum class TauCondition { E, O };
enum class TauClass { Plain, Subclass1 };

/// Solutions are φ = moment_scale · W[τ] for rational τ with
/// τ + odd_shift satisfying tau_condition.
struct ParamDescriptor {
  Category category = Category::Nondegenerate;
  PolyMatrix2x2 W;
  /// W̃_{[1,N]} alone.
  PolyMatrix2x2 chain_matrix;
  /// Factor acting on the residual problem (identity when nondegenerate).
  PolyMatrix2x2 basic_matrix;
  /// Required index of τ reading ν = ν₀, and the bound reading ν = 0.
  long tau_kappa = 0;
  long tau_kappa_max = 0;
  TauCondition tau_condition = TauCondition::E;
  TauClass tau_class = TauClass::Plain;
  Rational odd_shift = 0;
  std::size_t nu0 = 0;
  std::size_t nu_minus = 0;
  /// κ_N = ν₋(S_{n_N−1}), 0 for an empty chain.
  std::size_t chain_kappa = 0;
  Rational moment_scale = 1;
  /// det W = det_scale · λ^{det_lambda_power}.
  Rational det_scale = 1;
  std::size_t det_lambda_power = 0;
};

struct SolutionReport {
  Status status = Status::Unsolvable;
  Reason reason = Reason::KappaTooSmall;
  std::optional<RationalFunction> unique_solution;
  std::optional<ParamDescriptor> descriptor;
  Classification classification;
};

std::string_view to_string(Category c);
std::string_view to_string(Status s);
std::string_view to_string(Reason r);
std::string_view to_string(TauCondition c);
std::string_view to_string(TauClass c);
std::string_view to_string(ProblemKind k);

Classification classify(const MomentSequence& s);

SolutionReport solve(const ProblemInstance& inst);

/// Parametrization matrix for the solvable regime κ ≥ ν₋ (nondegenerate) or
/// κ ≥ ν₋ + ν₀ (degenerate; the zero sequence counts as case A with an empty
/// chain). Throws NotParametrized if the determinant check fails.
ParamDescriptor param_matrix(const Classification& cls, const MomentSequence& s,
                             std::size_t kappa, ProblemKind kind);

}  // namespace gnm
