#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gnm/hankel.hpp"
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

Matrix random_symmetric(Rng& rng, std::size_t n, bool sparse) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rational x = sparse ? Rational(rng.integer(-1, 1)) : rng.rational();
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

}  // namespace

TEST_CASE("inertia examples") {
  CHECK(inertia(hankel_matrix(S({1, 0, 1, 0, 1}), 2)) == Inertia{2, 1, 0});
  CHECK(inertia(Matrix(3, 3)) == Inertia{0, 3, 0});
  CHECK(inertia(hankel_matrix(S({0, 1, 0}), 1)) == Inertia{1, 0, 1});
  CHECK(inertia_by_descartes(hankel_matrix(S({1, 0, 1, 0, 1}), 2)) == Inertia{2, 1, 0});
}

TEST_CASE("normal indices and minors examples") {
  CHECK(normal_indices(S({1, 0, 1, 0, 1})) == std::vector<std::size_t>{1, 2});
  CHECK(leading_minors(S({1, 0, 1, 0, 1})) == std::vector<Rational>{1, 1, 0});
  CHECK(normal_indices(S({0, 0, 1, 0, 0})) == std::vector<std::size_t>{3});
  CHECK(leading_minors(S({0, 0, 1, 0, 0})) == std::vector<Rational>{0, 0, -1});
  CHECK(normal_indices(S({0, 0, 0})).empty());
}

TEST_CASE("hankel rank examples") {
  CHECK(hankel_rank(S({1, 1, 1, 1, 1})) == 1);
  CHECK(hankel_rank(S({1, 0, 1, 0, 1})) == 2);
  CHECK(hankel_rank(S({0, 0, 0, 0, 0})) == 0);
  CHECK(hankel_rank(S({1, 0, 2})) == 2);
  // Odd length uses the first 2n+1 entries.
  CHECK(hankel_rank(S({1, 1, 1, 5})) == 1);
}

TEST_CASE("recursive generation examples") {
  const auto a = recursive_generation(S({1, 1, 1, 1, 1}));
  CHECK(a.flag);
  CHECK(*a.alphas == std::vector<Rational>{1});
  CHECK_FALSE(recursive_generation(S({1, 1, 1, 1, 2})).flag);
  const auto c = recursive_generation(S({1, 0, 1, 0, 1}));
  CHECK(c.flag);
  CHECK(*c.alphas == std::vector<Rational>{1, 0});
  const auto z = recursive_generation(S({0, 0, 0}));
  CHECK(z.flag);
  CHECK(z.alphas->empty());
  CHECK_FALSE(recursive_generation(S({0, 0, 1})).flag);
  // Odd ℓ: the trailing moment must follow the recursion too.
  CHECK(recursive_generation(S({1, 1, 1, 1})).flag);
  CHECK_FALSE(recursive_generation(S({1, 1, 1, 2})).flag);
}

TEST_CASE("inertia-preserving extension examples") {
  const auto a = extend_preserving_inertia(S({1, 1, 1, 1, 1}));
  CHECK(a.exists);
  CHECK(*a.witness == std::make_pair(Rational(1), Rational(1)));
  CHECK_FALSE(extend_preserving_inertia(S({1, 1, 1, 1, 2})).exists);
  const auto z = extend_preserving_inertia(S({0, 0, 0, 0, 0}));
  CHECK(z.exists);
  CHECK(*z.witness == std::make_pair(Rational(0), Rational(0)));
  // Nondegenerate input: the Schur complement of the extension vanishes.
  const auto nd = extend_preserving_inertia(S({1, 0, 2}));
  CHECK(nd.exists);
  CHECK(*nd.witness == std::make_pair(Rational(0), Rational(4)));
}

TEST_CASE("inertia against row-reduction rank and Descartes oracle") {
  Rng rng(21);
  for (int it = 0; it < 150; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 10));
    const Matrix m = random_symmetric(rng, n, rng.chance(0.5));
    const Inertia in = inertia(m);
    CHECK(in.nu_plus + in.nu_zero + in.nu_minus == n);
    CHECK(in.nu_plus + in.nu_minus == rank_by_rref(m));
  }
  for (int it = 0; it < 150; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(0, 7));
    const auto s = rng.chance(0.5) ? rng.sparse_sequence(2 * n + 1) : rng.sequence(2 * n + 1, 0.3);
    const Matrix h = hankel_matrix(s, n);
    CHECK(inertia(h) == inertia_by_descartes(h));
  }
}

TEST_CASE("leading minors agree with direct determinants") {
  Rng rng(22);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(0, 6));
    const MomentSequence s(rng.chance(0.5) ? rng.sparse_sequence(2 * n + 1) : rng.sequence(2 * n + 1, 0.3));
    const auto minors = leading_minors(s);
    REQUIRE(minors.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK((minors[k] != 0) == (rank_by_rref(hankel_matrix(s, k)) == k + 1));
      CHECK(minors[k] == determinant(hankel_matrix(s, k)));
    }
  }
}

TEST_CASE("Hankel rank equals the largest normal index for degenerate data") {
  Rng rng(23);
  int degenerate = 0;
  for (int it = 0; it < 400; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const MomentSequence s(rng.sparse_sequence(2 * n + 1));
    const auto idx = normal_indices(s);
    CHECK(hankel_rank(s) == hankel_rank_by_span(s.entries()));
    if (determinant(hankel_matrix(s, n)) == 0 && !s.zero_through(2 * n)) {
      ++degenerate;
      CHECK(hankel_rank_by_span(s.entries()) == (idx.empty() ? 0 : idx.back()));
    }
  }
  CHECK(degenerate > 50);
}

TEST_CASE("recursive generation matches the inertia-preserving extension") {
  Rng rng(24);
  int extendable = 0;
  for (int it = 0; it < 300; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<Rational> raw;
    if (rng.chance(0.5)) {
      const auto r = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
      const auto t = rng.distinct_points(r);
      std::vector<Rational> w(r);
      for (auto& x : w) x = rng.nonzero_rational();
      raw = atomic_moments(w, t, 2 * n);
      if (rng.chance(0.4)) raw[2 * n] += rng.nonzero_rational();
    } else {
      raw = rng.sparse_sequence(2 * n + 1);
    }
    const MomentSequence s(raw);
    if (determinant(hankel_matrix(s, n)) != 0) continue;
    const auto rg = recursive_generation(s);
    const auto ext = extend_preserving_inertia(s);
    const auto oracle = extension_by_range(raw);
    CHECK(rg.flag == ext.exists);
    CHECK(ext.exists == oracle.has_value());
    if (ext.exists) {
      ++extendable;
      auto big = raw;
      big.push_back(ext.witness->first);
      big.push_back(ext.witness->second);
      CHECK(inertia(hankel_matrix(big, n + 1)).nu_minus == inertia(hankel_matrix(raw, n)).nu_minus);
    }
  }
  CHECK(extendable > 30);
}

TEST_CASE("block inverse formula for the anti-triangular pattern") {
  Rng rng(25);
  for (int it = 0; it < 40; ++it) {
    const auto k = static_cast<std::size_t>(rng.integer(1, 3));
    const auto m = static_cast<std::size_t>(rng.integer(1, 3));
    Matrix a13(k, k), a22 = random_symmetric(rng, m, false), a23(m, k), a33 = random_symmetric(rng, k, false);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a13(i, j) = rng.rational();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) a23(i, j) = rng.rational();
    if (determinant(a13) == 0 || determinant(a22) == 0) continue;
    const std::size_t N = 2 * k + m;
    Matrix big(N, N);
    auto put = [&big](const Matrix& b, std::size_t r0, std::size_t c0) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) big(r0 + i, c0 + j) = b(i, j);
    };
    put(a13, 0, k + m);
    put(a22, k, k);
    put(a23, k, k + m);
    put(a13.transpose(), k + m, 0);
    put(a23.transpose(), k + m, k);
    put(a33, k + m, k + m);
    auto inverse = [](const Matrix& x) {
      const std::size_t d = x.rows();
      Matrix inv(d, d);
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<Rational> e(d);
        e[c] = 1;
        const auto col = *solve_linear(x, e);
        for (std::size_t r = 0; r < d; ++r) inv(r, c) = col[r];
      }
      return inv;
    };
    const Matrix i13 = inverse(a13), i13t = inverse(a13.transpose()), i22 = inverse(a22);
    Matrix formula(N, N);
    auto put_f = [&formula](const Matrix& b, std::size_t r0, std::size_t c0) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) formula(r0 + i, c0 + j) = b(i, j);
    };
    const Matrix schur = a33 - a23.transpose() * i22 * a23;
    put_f(Matrix(k, k) - i13t * schur * i13, 0, 0);
    put_f(Matrix(k, m) - i13t * a23.transpose() * i22, 0, k);
    put_f(i13t, 0, k + m);
    put_f(Matrix(m, k) - i22 * a23 * i13, k, 0);
    put_f(i22, k, k);
    put_f(i13, k + m, 0);
    CHECK(big * formula == Matrix::identity(N));
  }
}

TEST_CASE("equal negative index forces range inclusion and the quadratic bound") {
  Rng rng(26);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto m = static_cast<std::size_t>(rng.integer(1, 3));
    Matrix full(n + m, n + m);
    if (rng.chance(0.5)) {
      full = random_symmetric(rng, n + m, true);
    } else {
      // [I 0; Xᵀ I]·diag(A, D)·[I X; 0 I] with D ⪰ 0 keeps ν₋ of A.
      const Matrix a = random_symmetric(rng, n, true);
      Matrix x(n, m), dd(m, m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = rng.integer(-2, 2);
      for (std::size_t i = 0; i < m; ++i) dd(i, i) = rng.integer(0, 2);
      Matrix lower = Matrix::identity(n + m), mid(n + m, n + m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) lower(n + j, i) = x(i, j);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mid(i, j) = a(i, j);
      for (std::size_t i = 0; i < m; ++i) mid(n + i, n + i) = dd(i, i);
      full = lower * mid * lower.transpose();
    }
    const Matrix a = full.block(0, 0, n, n);
    const Matrix b = full.block(0, n, n, m);
    const Matrix c = full.block(n, n, m, m);
    if (inertia(full).nu_minus != inertia(a).nu_minus) continue;
    ++checked;
    Matrix ab(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) ab(i, j) = a(i, j);
      for (std::size_t j = 0; j < m; ++j) ab(i, n + j) = b(i, j);
    }
    CHECK(rank_by_rref(ab) == rank_by_rref(a));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> h(m);
      for (auto& v : h) v = rng.integer(-3, 3);
      std::vector<Rational> bh(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) bh[i] += b(i, j) * h[j];
      auto g = particular_solution(a, bh);
      REQUIRE(g.has_value());
      for (const auto& kv : null_space(a)) {
        const Rational coef = rng.integer(-2, 2);
        for (std::size_t i = 0; i < n; ++i) (*g)[i] += coef * kv[i];
      }
      Rational hch = 0, gag = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) hch += h[i] * c(i, j) * h[j];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gag += (*g)[i] * a(i, j) * (*g)[j];
      CHECK(hch >= gag);
    }
  }
  CHECK(checked > 100);
}
