#include "gnm/schur.hpp"

#include "gnm/errors.hpp"
#include "gnm/hankel.hpp"
#include "gnm/toeplitz.hpp"

namespace gnm {

namespace {

std::size_t first_nonzero(const std::vector<Rational>& s) {
  std::size_t j = 0;
  while (j < s.size() && s[j] == 0) ++j;
  return j;
}

// A sequence has a normal index exactly when its first nonzero entry s_m
// satisfies 2m ≤ ℓ; the first normal index is then m+1.
bool has_normal_index(const std::vector<Rational>& s) {
  const std::size_t m = first_nonzero(s);
  return m < s.size() && 2 * m + 1 <= s.size();
}

}  // namespace

SchurStep schur_step(const std::vector<Rational>& s) {
  if (!has_normal_index(s)) throw MathError(ErrorCode::NoNormalIndex, "sequence has no normal index");
  const std::size_t m = first_nonzero(s);
  const auto inv = invert_expansion(s, m);
  SchurStep step;
  step.gap = m + 1;
  step.p = inv.p;
  step.eps = inv.eps;
  if (inv.tail) {
    step.induced = *inv.tail;
    const std::size_t k = first_nonzero(step.induced);
    if (k < step.induced.size()) {
      step.a_sq = abs_value(step.induced[k]);
      for (auto& x : step.induced) x /= step.a_sq;
    }
  }
  return step;
}

SchurStep schur_step(const MomentSequence& s) { return schur_step(s.entries()); }

SchurChain schur_chain(const MomentSequence& s) {
  SchurChain chain;
  std::vector<Rational> cur = s.entries();
  const std::size_t m = first_nonzero(cur);
  if (m < cur.size()) {
    chain.scale = abs_value(cur[m]);
    for (auto& x : cur) x /= chain.scale;
  }
  std::size_t total = 0;
  while (!cur.empty() && has_normal_index(cur)) {
    SchurStep step = schur_step(cur);
    total += step.gap;
    chain.normal_indices.push_back(total);
    chain.kappa_offsets.push_back(inertia(hankel_matrix(s, total - 1)).nu_minus);
    cur = step.induced;
    chain.steps.push_back(std::move(step));
  }
  chain.residual = std::move(cur);
  return chain;
}

PQ pq_polynomials(const SchurChain& chain) {
  PQ out;
  out.P.push_back(Polynomial::constant(1));
  out.Q.push_back(Polynomial());
  const auto& st = chain.steps;
  for (std::size_t j = 1; j <= st.size(); ++j) {
    const SchurStep& cur = st[j - 1];
    if (j == 1) {
      out.P.push_back(cur.p);
      out.Q.push_back(Polynomial::constant(cur.eps));
      continue;
    }
    const SchurStep& prev = st[j - 2];
    const Rational c = Rational(prev.eps * cur.eps) * prev.a_sq;
    out.P.push_back(cur.p * out.P[j - 1] - c * out.P[j - 2]);
    out.Q.push_back(cur.p * out.Q[j - 1] - c * out.Q[j - 2]);
  }
  return out;
}

PolyMatrix2x2 resolvent(const SchurChain& chain, std::size_t j) {
  if (j > chain.steps.size()) throw MathError(ErrorCode::IndexOutOfRange, "resolvent index past the chain");
  if (j == 0) return PolyMatrix2x2::identity();
  const auto pq = pq_polynomials(chain);
  const SchurStep& last = chain.steps[j - 1];
  const Rational c = Rational(last.eps) * last.a_sq;
  Rational scale = 1;
  for (std::size_t i = 0; i < j; ++i) scale *= chain.steps[i].a_sq;
  return {-(c * pq.Q[j - 1]), -pq.Q[j], c * pq.P[j - 1], pq.P[j], scale};
}

PolyMatrix2x2 step_matrix(const SchurStep& step) {
  return {Polynomial(), Polynomial::constant(-step.eps),
          Polynomial::constant(Rational(step.eps) * step.a_sq), step.p, step.a_sq};
}

}  // namespace gnm
