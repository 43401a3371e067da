#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnm/errors.hpp"
#include "gnm/hankel.hpp"
#include "gnm/laurent.hpp"
#include "gnm/schur.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace gnm;
using namespace gnm::testing;

namespace {

MomentSequence S(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return MomentSequence(std::move(v));
}

std::vector<Rational> R(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

const Polynomial lam = Polynomial::lambda();

// Random sequence with at least one normal index, ℓ ≤ 12.
MomentSequence random_with_normal_index(Rng& rng) {
  while (true) {
    const auto ell = static_cast<std::size_t>(rng.integer(0, 12));
    auto raw = rng.chance(0.3) ? rng.sparse_sequence(ell + 1) : rng.sequence(ell + 1, 0.3);
    const MomentSequence s(raw);
    if (!normal_indices(s).empty()) return s;
  }
}

Matrix flip(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
  return out;
}

Matrix inverse(const Matrix& x) {
  const std::size_t d = x.rows();
  Matrix inv(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rational> e(d);
    e[c] = 1;
    const auto col = *solve_linear(x, e);
    for (std::size_t r = 0; r < d; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace

TEST_CASE("schur_step examples") {
  const auto a = schur_step(S({1, 0, 1, 0, 1}));
  CHECK(a.gap == 1);
  CHECK(a.p == lam);
  CHECK(a.eps == 1);
  CHECK(a.a_sq == 1);
  CHECK(a.induced == R({1, 0, 0}));
  const auto b = schur_step(S({1, 1, 1, 1, 1}));
  CHECK(b.gap == 1);
  CHECK(b.p == Polynomial({-1, 1}));
  CHECK(b.induced == R({0, 0, 0}));
  const auto c = schur_step(S({0, 1, 0, 1}));
  CHECK(c.gap == 2);
  CHECK(c.p == Polynomial({-1, 0, 1}));
  CHECK(c.eps == 1);
  CHECK(c.a_sq == 1);
  CHECK(c.induced.empty());
  // Induced data are normalized by a² = |first nonzero tail entry|.
  const auto d = schur_step(S({1, 0, 3, 0, 5}));
  CHECK(d.a_sq == 3);
  CHECK(d.induced[0] == 1);
  bool threw = false;
  try {
    schur_step(S({0, 0, 1}));
  } catch (const MathError& e) {
    threw = e.code() == ErrorCode::NoNormalIndex;
  }
  CHECK(threw);
}

TEST_CASE("schur_chain examples") {
  const auto a = schur_chain(S({1, 0, 1, 0, 1}));
  REQUIRE(a.steps.size() == 2);
  CHECK(a.steps[1].p == lam);
  CHECK(a.steps[1].eps == 1);
  CHECK(a.residual == R({0}));
  CHECK(a.normal_indices == std::vector<std::size_t>{1, 2});
  const auto b = schur_chain(S({1, 1, 1, 1, 1}));
  REQUIRE(b.steps.size() == 1);
  CHECK(b.residual == R({0, 0, 0}));
  const auto z = schur_chain(S({0, 0, 0}));
  CHECK(z.steps.empty());
  CHECK(z.residual == R({0, 0, 0}));
  const auto scaled = schur_chain(S({4, 0, 4, 0, 4}));
  CHECK(scaled.scale == 4);
  CHECK(scaled.steps.size() == 2);
}

TEST_CASE("P and Q polynomial examples") {
  const auto a = pq_polynomials(schur_chain(S({1, 0, 1, 0, 1})));
  CHECK(a.P == std::vector<Polynomial>{Polynomial::constant(1), lam, Polynomial({-1, 0, 1})});
  CHECK(a.Q == std::vector<Polynomial>{Polynomial(), Polynomial::constant(1), lam});
  const auto b = pq_polynomials(schur_chain(S({1, 1, 1, 1, 1})));
  CHECK(b.P == std::vector<Polynomial>{Polynomial::constant(1), Polynomial({-1, 1})});
  CHECK(b.Q == std::vector<Polynomial>{Polynomial(), Polynomial::constant(1)});
  const auto e = pq_polynomials(schur_chain(S({0, 0, 0})));
  CHECK(e.P == std::vector<Polynomial>{Polynomial::constant(1)});
  CHECK(e.Q == std::vector<Polynomial>{Polynomial()});
}

TEST_CASE("resolvent examples") {
  const auto chain = schur_chain(S({1, 0, 1, 0, 1}));
  const auto w = resolvent(chain, 2);
  CHECK(w.w11 == Polynomial::constant(-1));
  CHECK(w.w12 == -lam);
  CHECK(w.w21 == lam);
  CHECK(w.w22 == Polynomial({-1, 0, 1}));
  CHECK(w.scale == 1);
  const auto v = resolvent(schur_chain(S({-1, 0})), 1);
  CHECK(v.w11.is_zero());
  CHECK(v.w12 == Polynomial::constant(1));
  CHECK(v.w21 == Polynomial::constant(-1));
  CHECK(v.w22 == lam);
  CHECK(resolvent(chain, 0) == PolyMatrix2x2::identity());
  bool threw = false;
  try {
    resolvent(chain, 3);
  } catch (const MathError& e) {
    threw = e.code() == ErrorCode::IndexOutOfRange;
  }
  CHECK(threw);
}

TEST_CASE("resolvent structure on random chains") {
  Rng rng(41);
  for (int it = 0; it < 200; ++it) {
    const auto s = random_with_normal_index(rng);
    const auto chain = schur_chain(s);
    const auto pq = pq_polynomials(chain);
    Rational prod = 1;
    PolyMatrix2x2 product = PolyMatrix2x2::identity();
    std::size_t total = 0;
    for (std::size_t j = 0; j <= chain.steps.size(); ++j) {
      if (j > 0) {
        prod *= chain.steps[j - 1].a_sq;
        product = product * step_matrix(chain.steps[j - 1]);
        total += chain.steps[j - 1].gap;
        CHECK(chain.steps[j - 1].p.is_monic());
        CHECK(chain.steps[j - 1].p.degree() == static_cast<long>(chain.steps[j - 1].gap));
        CHECK(pq.P[j].degree() == static_cast<long>(total));
        const Polynomial wr = pq.P[j] * pq.Q[j - 1] - pq.P[j - 1] * pq.Q[j];
        CHECK(wr.degree() <= 0);
      }
      const auto w = resolvent(chain, j);
      CHECK(w.det() == Polynomial::constant(prod));
      CHECK(w.scale == prod);
      CHECK(w == product);
    }
    CHECK(total == (chain.normal_indices.empty() ? 0 : chain.normal_indices.back()));
  }
}

TEST_CASE("inertia bookkeeping along the chain") {
  Rng rng(42);
  for (int it = 0; it < 200; ++it) {
    const auto s = random_with_normal_index(rng);
    const auto chain = schur_chain(s);
    const std::size_t n = s.n();
    for (std::size_t j = 0; j < chain.steps.size(); ++j) {
      const std::size_t nj = chain.normal_indices[j];
      const auto& induced = chain.steps[j].induced;
      const Inertia base = inertia(hankel_matrix(s, nj - 1));
      CHECK(base.nu_zero == 0);
      CHECK(chain.kappa_offsets[j] == base.nu_minus);
      for (std::size_t i = nj; i <= n && 2 * (i - nj) + 1 <= induced.size(); ++i) {
        const Inertia full = inertia(hankel_matrix(s, i));
        const Inertia ind = inertia(hankel_matrix(induced, i - nj));
        CHECK(ind.nu_plus == full.nu_plus - base.nu_plus);
        CHECK(ind.nu_minus == full.nu_minus - base.nu_minus);
        CHECK(ind.nu_zero == full.nu_zero);
      }
    }
    for (std::size_t j = 1; j < chain.kappa_offsets.size(); ++j) {
      CHECK(chain.kappa_offsets[j - 1] <= chain.kappa_offsets[j]);
    }
  }
}

TEST_CASE("induced Hankel matrix equals the flipped Schur complement") {
  // a₁²·J S⁽¹⁾_i J = A₁₃⁻¹ (A₃₃ − A₂₃ᵀ A₂₂⁻¹ A₂₃) A₁₃⁻¹ with S_{n₁+i} split as
  // [[A₂₂, A₂₃], [A₂₃ᵀ, A₃₃]], A₂₂ = S_{n₁−1}, and A₁₃ the anti-triangular
  // Hankel block ending in s_{n₁−1}, for |s_{n₁−1}| = 1.
  Rng rng(43);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    auto raw = random_with_normal_index(rng).entries();
    std::size_t m = 0;
    while (raw[m] == 0) ++m;
    const Rational scale = abs_value(raw[m]);
    for (auto& x : raw) x /= scale;
    const MomentSequence s(raw);
    const auto step = schur_step(s);
    const std::size_t n1 = step.gap;
    for (std::size_t i = 0; n1 + i <= s.n() && 2 * i + 1 <= step.induced.size(); ++i) {
      Matrix a13(i + 1, i + 1);
      for (std::size_t r = 0; r <= i; ++r)
        for (std::size_t c = 0; c <= i; ++c)
          if (r + c >= i) a13(r, c) = raw[n1 - 1 + r + c - i];
      const Matrix full = hankel_matrix(s, n1 + i);
      const Matrix a22 = full.block(0, 0, n1, n1);
      const Matrix a23 = full.block(0, n1, n1, i + 1);
      const Matrix a33 = full.block(n1, n1, i + 1, i + 1);
      const Matrix inv13 = inverse(a13);
      const Matrix rhs = inv13 * (a33 - a23.transpose() * inverse(a22) * a23) * inv13;
      Matrix lhs = flip(hankel_matrix(step.induced, i));
      for (std::size_t r = 0; r <= i; ++r)
        for (std::size_t c = 0; c <= i; ++c) lhs(r, c) *= step.a_sq;
      CHECK(lhs == rhs);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("normal indices shift through the first step") {
  Rng rng(44);
  for (int it = 0; it < 200; ++it) {
    const auto s = random_with_normal_index(rng);
    const auto chain = schur_chain(s);
    const auto& step = chain.steps.front();
    if (step.induced.empty()) continue;
    // Indices of the induced problem, restricted to its own Hankel size.
    const MomentSequence ind(step.induced);
    std::vector<std::size_t> expect;
    for (std::size_t k : normal_indices(s)) {
      if (k > step.gap && k - step.gap <= ind.n() + 1) expect.push_back(k - step.gap);
    }
    CHECK(normal_indices(ind) == expect);
  }
}

TEST_CASE("the residual of a degenerate chain has no normal index") {
  Rng rng(45);
  int degenerate = 0;
  for (int it = 0; it < 300; ++it) {
    const auto ell = static_cast<std::size_t>(rng.integer(2, 12));
    const MomentSequence s(rng.sparse_sequence(ell + 1));
    if (normal_indices(s).empty()) continue;
    if (determinant(hankel_matrix(s, s.n())) != 0) continue;
    ++degenerate;
    const auto chain = schur_chain(s);
    REQUIRE_FALSE(chain.residual.empty());
    CHECK(normal_indices(MomentSequence(chain.residual)).empty());
    CHECK(chain.normal_indices == normal_indices(s));
  }
  CHECK(degenerate > 30);
}

TEST_CASE("inverting the resolvent recovers a function with the residual moments") {
  Rng rng(46);
  for (int it = 0; it < 150; ++it) {
    const auto phi = random_strictly_proper(rng, static_cast<std::size_t>(rng.integer(1, 4)), rng.chance(0.4));
    if (phi.is_zero()) continue;
    const auto ell = static_cast<std::size_t>(rng.integer(0, 10));
    const auto s = moments_from_expansion(laurent_expand(phi, ell + 1), ell);
    const auto chain = schur_chain(s);
    if (chain.steps.empty()) continue;
    const auto w = resolvent(chain, chain.steps.size());
    // φ_N = W⁻¹[φ/scale], with W⁻¹ ∝ [[w22, −w12], [−w21, w11]].
    const RationalFunction target = phi * RationalFunction(Polynomial::constant(1 / chain.scale));
    const RationalFunction phiN = rf_normalize(w.w22 * target.num() - w.w12 * target.den(),
                                               w.w11 * target.den() - w.w21 * target.num());
    if (chain.residual.empty()) continue;
    REQUIRE(phiN.is_proper());
    const auto got = moments_from_expansion(laurent_expand(phiN, chain.residual.size()), chain.residual.size() - 1);
    CHECK(got.entries() == chain.residual);
  }
}
