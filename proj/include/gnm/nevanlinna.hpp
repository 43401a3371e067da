#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gnm/moment_sequence.hpp"
#include "gnm/poly_matrix.hpp"
#include "gnm/rational_function.hpp"
#include "gnm/solver.hpp"

namespace gnm {

/// A real rational point, or infinity when empty.
using Point = std::optional<Rational>;
inline const Point kInfinity = std::nullopt;

/// ν₋ of the Hankel matrix of the moments of a strictly proper φ, sized by
/// deg den. Throws ImproperFunction.
std::size_t kronecker_kappa(const RationalFunction& phi);

/// Negative index of a real polynomial as a generalized Nevanlinna function.
std::size_t polynomial_kappa(const Polynomial& q);

/// Negative index of any real rational function: the strictly proper part
/// and the polynomial part carry their negative squares at disjoint points.
std::size_t negative_index(const RationalFunction& phi);

/// Multiplicity of φ as a generalized pole of nonpositive type at `point`.
std::size_t gpnt_multiplicity(const RationalFunction& phi, const Point& point);

/// Multiplicity as a generalized zero of nonpositive type (GPNT of −1/φ).
std::size_t gznt_multiplicity(const RationalFunction& phi, const Point& point);

struct GNIndexReport {
  std::size_t kappa = 0;
  std::size_t pi_inf = 0;
  std::size_t kappa_inf = 0;
  std::size_t kappa_0 = 0;
  std::size_t pi_0 = 0;
};
GNIndexReport index_report(const RationalFunction& phi);

/// (w11·τ + w12)/(w21·τ + w22), reduced. Throws DegenerateTransform.
RationalFunction apply_lft(const PolyMatrix2x2& W, const RationalFunction& tau);

/// φ = moment_scale · W[τ].
RationalFunction solution_from_parameter(const ParamDescriptor& desc, const RationalFunction& tau);

struct ParameterCheck {
  long kappa_tau = 0;
  bool satisfies_E = false;
  bool satisfies_O = false;
  bool in_subclass_1 = false;
  /// Whether the parameter meets the descriptor's condition and class.
  bool admissible = false;
};

/// Checks τ + odd_shift against the descriptor's condition and class.
ParameterCheck check_parameter(const RationalFunction& tau, const ParamDescriptor& desc);

/// Two readings of the index ν lost when multiplying by λ^{2ν₀}, given
/// κ₀ = GPNT multiplicity at 0 of the basic-level function: the printed
/// branch condition (κ₀ > 0 ⇒ ν₀) and the non-overlapping one (κ₀ > ν₀ ⇒ ν₀).
struct NuReadings {
  std::size_t kappa_0 = 0;
  std::size_t printed = 0;
  std::size_t corrected = 0;
};
NuReadings nu_readings(std::size_t kappa_0, std::size_t nu0);

/// Readings for a concrete parameter: κ₀ of basic_matrix[τ].
NuReadings nu_readings(const ParamDescriptor& desc, const RationalFunction& tau);

struct Verdict {
  bool pass = false;
  /// "", "proper", "moments" or "kappa".
  std::string failed_check;
  std::string detail;
  std::optional<std::size_t> index;
};

/// Checks that φ vanishes at infinity, reproduces s through index ℓ, and has
/// negative index κ. For rational φ the MP and IP verdicts coincide.
Verdict verify_solution(const MomentSequence& s, std::size_t kappa, ProblemKind kind,
                        const RationalFunction& phi);

}  // namespace gnm
