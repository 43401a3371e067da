#include "gnm/nevanlinna.hpp"

#include "gnm/errors.hpp"
#include "gnm/hankel.hpp"
#include "gnm/laurent.hpp"

namespace gnm {

std::size_t kronecker_kappa(const RationalFunction& phi) {
  if (!phi.is_strictly_proper()) {
    throw MathError(ErrorCode::ImproperFunction, "kronecker_kappa needs a strictly proper function");
  }
  if (phi.is_zero()) return 0;
  const auto d = static_cast<std::size_t>(phi.den().degree());
  const auto s = moments_from_expansion(laurent_expand(phi, 2 * d + 1), 2 * d);
  return inertia(hankel_matrix(s, d)).nu_minus;
}

std::size_t polynomial_kappa(const Polynomial& q) {
  if (q.degree() < 1) return 0;
  const auto d = static_cast<std::size_t>(q.degree());
  Matrix h(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h(i, j) = q.coeff(i + j + 1);
  return inertia(h).nu_minus;
}

std::size_t negative_index(const RationalFunction& phi) {
  const auto [poly, rest] = phi.split();
  return kronecker_kappa(rest) + polynomial_kappa(poly);
}

namespace {

// Order k and leading coefficient c with φ ~ c·z^{−k} as z → 0 (φ(α+z)) or
// φ ~ c·λ^{k} as λ → ∞.
struct LocalData {
  long k;
  Rational c;
};

LocalData local_data(const RationalFunction& phi, const Point& point) {
  if (!point) {
    return {phi.num().degree() - phi.den().degree(), phi.num().leading() / phi.den().leading()};
  }
  const Polynomial n = phi.num().taylor_shift(*point);
  const Polynomial d = phi.den().taylor_shift(*point);
  const std::size_t a = n.low_order();
  const std::size_t b = d.low_order();
  return {static_cast<long>(b) - static_cast<long>(a), n.coeff(a) / d.coeff(b)};
}

}  // namespace

std::size_t gpnt_multiplicity(const RationalFunction& phi, const Point& point) {
  if (phi.is_zero()) throw MathError(ErrorCode::InvalidArgument, "GPNT multiplicity of the zero function");
  const auto [k, c] = local_data(phi, point);
  if (k <= 0) return 0;
  const auto uk = static_cast<std::size_t>(k);
  if (uk % 2 == 0) return uk / 2;
  // Along λ = α + iy the sign of Im φ near the pole decides the type; at
  // infinity the ray λ = iy flips the roles of the two signs.
  const bool positive_type = point ? c < 0 : c > 0;
  return positive_type ? (uk - 1) / 2 : (uk + 1) / 2;
}

std::size_t gznt_multiplicity(const RationalFunction& phi, const Point& point) {
  if (phi.is_zero()) throw MathError(ErrorCode::InvalidArgument, "GZNT multiplicity of the zero function");
  return gpnt_multiplicity(-(RationalFunction(Polynomial::constant(1)) / phi), point);
}

GNIndexReport index_report(const RationalFunction& phi) {
  GNIndexReport r;
  r.kappa = negative_index(phi);
  if (phi.is_zero()) return r;
  const Point zero = Rational(0);
  r.pi_inf = gznt_multiplicity(phi, kInfinity);
  r.kappa_inf = gpnt_multiplicity(phi, kInfinity);
  r.kappa_0 = gpnt_multiplicity(phi, zero);
  r.pi_0 = gznt_multiplicity(phi, zero);
  return r;
}

RationalFunction apply_lft(const PolyMatrix2x2& W, const RationalFunction& tau) {
  const Polynomial& a = tau.num();
  const Polynomial& b = tau.den();
  const Polynomial den = W.w21 * a + W.w22 * b;
  if (den.is_zero()) {
    throw MathError(ErrorCode::DegenerateTransform, "linear fractional transform denominator vanishes");
  }
  return rf_normalize(W.w11 * a + W.w12 * b, den);
}

RationalFunction solution_from_parameter(const ParamDescriptor& desc, const RationalFunction& tau) {
  return apply_lft(desc.W, tau) * RationalFunction(Polynomial::constant(desc.moment_scale));
}

ParameterCheck check_parameter(const RationalFunction& tau, const ParamDescriptor& desc) {
  const RationalFunction shifted = tau + RationalFunction(Polynomial::constant(desc.odd_shift));
  ParameterCheck c;
  c.kappa_tau = static_cast<long>(negative_index(shifted));
  c.satisfies_E = shifted.is_proper();
  c.satisfies_O = shifted.is_strictly_proper();
  c.in_subclass_1 = shifted.is_proper();
  const bool cond = desc.tau_condition == TauCondition::E ? c.satisfies_E : c.satisfies_O;
  const bool cls = desc.tau_class == TauClass::Plain || c.in_subclass_1;
  c.admissible = cond && cls;
  return c;
}

NuReadings nu_readings(std::size_t kappa_0, std::size_t nu0) {
  NuReadings r;
  r.kappa_0 = kappa_0;
  r.printed = kappa_0 > 0 ? nu0 : kappa_0;
  r.corrected = kappa_0 > nu0 ? nu0 : kappa_0;
  return r;
}

NuReadings nu_readings(const ParamDescriptor& desc, const RationalFunction& tau) {
  const RationalFunction phi_basic = apply_lft(desc.basic_matrix, tau);
  const std::size_t k0 = phi_basic.is_zero() ? 0 : gpnt_multiplicity(phi_basic, Rational(0));
  return nu_readings(k0, desc.nu0);
}

Verdict verify_solution(const MomentSequence& s, std::size_t kappa, ProblemKind /*kind*/,
                        const RationalFunction& phi) {
  Verdict v;
  if (!phi.is_strictly_proper()) {
    v.failed_check = "proper";
    v.detail = "φ does not vanish at infinity";
    return v;
  }
  const auto got = moments_from_expansion(laurent_expand(phi, s.ell() + 1), s.ell());
  for (std::size_t j = 0; j <= s.ell(); ++j) {
    if (got[j] != s[j]) {
      v.failed_check = "moments";
      v.index = j;
      v.detail = "moment " + std::to_string(j) + " is " + to_string(got[j]) + ", expected " +
                 to_string(s[j]);
      return v;
    }
  }
  const std::size_t k = kronecker_kappa(phi);
  if (k != kappa) {
    v.failed_check = "kappa";
    v.detail = "negative index is " + std::to_string(k) + ", expected " + std::to_string(kappa);
    return v;
  }
  v.pass = true;
  return v;
}

}  // namespace gnm
