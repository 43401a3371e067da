#include "gnm/solver.hpp"

#include "gnm/errors.hpp"
#include "gnm/toeplitz.hpp"

namespace gnm {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Nondegenerate: return "NONDEGENERATE";
    case Category::DegenerateA: return "DEGENERATE_A";
    case Category::DegenerateB: return "DEGENERATE_B";
    case Category::Zero: return "ZERO";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Unsolvable: return "UNSOLVABLE";
    case Status::Unique: return "UNIQUE";
    case Status::Parametrized: return "PARAMETRIZED";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::OkUnique: return "OK_UNIQUE";
    case Reason::OkParametrized: return "OK_PARAMETRIZED";
    case Reason::KappaTooSmall: return "KAPPA_TOO_SMALL";
    case Reason::GapRegime: return "GAP_REGIME";
    case Reason::NotRecursivelyGenerated: return "NOT_RECURSIVELY_GENERATED";
    case Reason::OddTrailingNonzero: return "ODD_TRAILING_NONZERO";
  }
  return "?";
}

std::string_view to_string(TauCondition c) { return c == TauCondition::E ? "E" : "O"; }

std::string_view to_string(TauClass c) { return c == TauClass::Plain ? "PLAIN" : "SUBCLASS_1"; }

std::string_view to_string(ProblemKind k) { return k == ProblemKind::MP ? "MP" : "IP"; }

Classification classify(const MomentSequence& s) {
  Classification cls;
  const std::size_t n = s.n();
  cls.inertia = inertia(hankel_matrix(s, n));
  cls.nu0 = cls.inertia.nu_zero;
  cls.normal_indices = normal_indices(s);
  cls.hankel_rank = hankel_rank(s);
  cls.chain = schur_chain(s);
  cls.residual = cls.chain.residual;
  if (s.zero_through(2 * n)) {
    cls.category = Category::Zero;
  } else if (cls.nu0 == 0) {
    cls.category = Category::Nondegenerate;
  } else {
    const std::size_t nN = cls.chain.normal_indices.empty() ? 0 : cls.chain.normal_indices.back();
    bool zero = true;
    for (std::size_t j = 0; j <= 2 * (n - nN) && j < cls.residual.size(); ++j) {
      zero = zero && cls.residual[j] == 0;
    }
    cls.category = zero ? Category::DegenerateA : Category::DegenerateB;
    if (!zero) {
      std::size_t m = 0;
      while (cls.residual[m] == 0) ++m;
      cls.m_res = m;
    }
  }
  return cls;
}

namespace {

std::size_t last_normal_index(const SchurChain& chain) {
  return chain.normal_indices.empty() ? 0 : chain.normal_indices.back();
}

PolyMatrix2x2 case_b_basic(const Classification& cls, const MomentSequence& s) {
  const auto& r = cls.residual;
  const std::size_t m = *cls.m_res;
  const std::size_t nr = s.n() - last_normal_index(cls.chain);
  const std::size_t nu0 = m - nr;
  std::vector<Rational> shifted(r.begin() + static_cast<long>(2 * nu0), r.end());
  const std::size_t nhat = nr - nu0;
  const Polynomial p_hat = monic_inverter(shifted, nhat);
  const int eh = sign(r[m]);
  const Polynomial lam = Polynomial::monomial(1, 2 * nu0);
  return {Polynomial(), Polynomial::constant(-eh), lam * Polynomial::constant(eh), lam * p_hat, 1};
}

}  // namespace

ParamDescriptor param_matrix(const Classification& cls, const MomentSequence& s,
                             std::size_t kappa, ProblemKind kind) {
  ParamDescriptor d;
  d.category = cls.category;
  d.nu0 = cls.category == Category::Nondegenerate ? 0 : cls.nu0;
  d.nu_minus = cls.inertia.nu_minus;
  d.chain_kappa = cls.chain.kappa_offsets.empty() ? 0 : cls.chain.kappa_offsets.back();
  d.moment_scale = cls.chain.scale;
  d.chain_matrix = resolvent(cls.chain, cls.chain.steps.size());
  d.tau_condition = s.is_odd() ? TauCondition::O : TauCondition::E;
  d.tau_class = (s.is_odd() && kind == ProblemKind::MP) ? TauClass::Subclass1 : TauClass::Plain;
  const long k = static_cast<long>(kappa);
  const long nm = static_cast<long>(d.nu_minus);
  d.tau_kappa_max = k - nm;
  d.tau_kappa = k - nm - static_cast<long>(d.nu0);
  switch (cls.category) {
    case Category::Nondegenerate:
      d.basic_matrix = PolyMatrix2x2::identity();
      break;
    case Category::Zero:
    case Category::DegenerateA: {
      d.basic_matrix = PolyMatrix2x2::identity();
      d.basic_matrix.w22 = Polynomial::monomial(1, 2 * d.nu0);
      if (s.is_odd()) d.odd_shift = cls.residual.back();
      break;
    }
    case Category::DegenerateB:
      d.basic_matrix = case_b_basic(cls, s);
      break;
  }
  d.W = d.chain_matrix * d.basic_matrix;
  d.det_scale = d.chain_matrix.scale;
  d.det_lambda_power = 2 * d.nu0;
  if (d.W.det() != Polynomial::monomial(d.det_scale, d.det_lambda_power)) {
    throw MathError(ErrorCode::NotParametrized, "parametrization matrix failed its determinant check");
  }
  return d;
}

SolutionReport solve(const ProblemInstance& inst) {
  SolutionReport rep;
  rep.classification = classify(inst.s);
  const Classification& cls = rep.classification;
  const std::size_t nm = cls.inertia.nu_minus;
  const std::size_t nu0 = cls.nu0;
  const std::size_t kappa = inst.kappa;

  auto parametrized = [&] {
    rep.status = Status::Parametrized;
    rep.reason = Reason::OkParametrized;
    rep.descriptor = param_matrix(cls, inst.s, kappa, inst.kind);
  };
  auto unsolvable = [&](Reason r) {
    rep.status = Status::Unsolvable;
    rep.reason = r;
  };

  if (kappa < nm) {
    unsolvable(Reason::KappaTooSmall);
    return rep;
  }
  if (cls.category == Category::Nondegenerate) {
    parametrized();
    return rep;
  }
  if (kappa == nm) {
    if (cls.category == Category::DegenerateB) {
      unsolvable(Reason::NotRecursivelyGenerated);
      return rep;
    }
    if (inst.s.is_odd() && cls.residual.back() != 0) {
      unsolvable(Reason::OddTrailingNonzero);
      return rep;
    }
    const auto pq = pq_polynomials(cls.chain);
    const RationalFunction phi = rf_normalize(-pq.Q.back(), pq.P.back());
    rep.status = Status::Unique;
    rep.reason = Reason::OkUnique;
    rep.unique_solution = phi * RationalFunction(Polynomial::constant(cls.chain.scale));
    return rep;
  }
  if (kappa < nm + nu0) {
    unsolvable(Reason::GapRegime);
    return rep;
  }
  parametrized();
  return rep;
}

}  // namespace gnm
