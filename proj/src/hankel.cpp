#include "gnm/hankel.hpp"

#include <algorithm>
#include <utility>

#include "gnm/errors.hpp"

namespace gnm {

Matrix hankel_matrix(const std::vector<Rational>& s, std::size_t k) {
  if (2 * k + 1 > s.size()) {
    throw MathError(ErrorCode::IndexOutOfRange, "Hankel block larger than the data");
  }
  Matrix h(k + 1, k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) h(i, j) = s[i + j];
  return h;
}

Matrix hankel_matrix(const MomentSequence& s, std::size_t k) {
  return hankel_matrix(s.entries(), k);
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) {
    throw MathError(ErrorCode::InvalidArgument, "inertia of a non-symmetric matrix");
  }
  Inertia out;
  std::vector<std::vector<Rational>> a(symmetric.rows(), std::vector<Rational>(symmetric.rows()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = symmetric(i, j);

  auto drop = [&a](std::vector<std::size_t> idx) {
    std::sort(idx.rbegin(), idx.rend());
    for (std::size_t k : idx) {
      a.erase(a.begin() + static_cast<long>(k));
      for (auto& row : a) row.erase(row.begin() + static_cast<long>(k));
    }
  };

  while (!a.empty()) {
    const std::size_t m = a.size();
    std::size_t d = 0;
    while (d < m && a[d][d] == 0) ++d;
    if (d < m) {
      const Rational piv = a[d][d];
      (piv > 0 ? out.nu_plus : out.nu_minus) += 1;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == d || a[r][d] == 0) continue;
        const Rational f = a[r][d] / piv;
        for (std::size_t c = 0; c < m; ++c) {
          if (c != d) a[r][c] -= f * a[d][c];
        }
      }
      drop({d});
      continue;
    }
    std::size_t pi = m, pj = m;
    for (std::size_t i = 0; i < m && pi == m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) {
      out.nu_zero += m;
      break;
    }
    // Zero diagonal with off-diagonal b: the pivot block [[0,b],[b,0]] has one
    // positive and one negative eigenvalue; its inverse is [[0,1/b],[1/b,0]].
    out.nu_plus += 1;
    out.nu_minus += 1;
    const Rational b = a[pi][pj];
    std::vector<std::vector<Rational>> upd = a;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pi || r == pj) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (c == pi || c == pj) continue;
        upd[r][c] -= (a[r][pi] * a[pj][c] + a[r][pj] * a[pi][c]) / b;
      }
    }
    a = std::move(upd);
    drop({pi, pj});
  }
  return out;
}

std::vector<Rational> leading_minors(const MomentSequence& s) {
  const std::size_t n = s.n();
  Matrix m = hankel_matrix(s, n);
  std::vector<Rational> minors;
  minors.reserve(n + 1);
  // Bareiss without pivoting: before step k, m(k,k) is det S_k.
  Rational prev = 1;
  std::size_t k = 0;
  for (; k <= n; ++k) {
    if (m(k, k) == 0) break;
    minors.push_back(m(k, k));
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  for (; k <= n; ++k) minors.push_back(determinant(hankel_matrix(s, k)));
  return minors;
}

std::vector<std::size_t> normal_indices(const MomentSequence& s) {
  const auto minors = leading_minors(s);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < minors.size(); ++j)
    if (minors[j] != 0) out.push_back(j + 1);
  return out;
}

std::size_t hankel_rank(const MomentSequence& s) {
  const auto idx = normal_indices(s);
  return idx.empty() ? 0 : idx.back();
}

namespace {

// α with S_{r−1} α = (s_r, …, s_{2r−1}); entries past the data read as zero.
std::vector<Rational> recursion_coefficients(const std::vector<Rational>& s, std::size_t r) {
  std::vector<Rational> ext = s;
  if (ext.size() < 2 * r) ext.resize(2 * r);
  Matrix h(r, r);
  std::vector<Rational> rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) h(i, j) = ext[i + j];
    rhs[i] = ext[r + i];
  }
  auto alpha = solve_linear(h, rhs);
  if (!alpha) throw MathError(ErrorCode::NoNormalIndex, "recursion matrix is singular");
  return *alpha;
}

Rational continue_recursion(const std::vector<Rational>& s, const std::vector<Rational>& alpha,
                            std::size_t j) {
  const std::size_t r = alpha.size();
  Rational acc = 0;
  for (std::size_t i = 0; i < r; ++i) acc += alpha[i] * s[j - r + i];
  return acc;
}

}  // namespace

RecursionResult recursive_generation(const MomentSequence& s) {
  const std::size_t r = hankel_rank(s);
  if (r == 0) {
    if (s.zero_through(s.ell())) return {true, std::vector<Rational>{}};
    return {false, std::nullopt};
  }
  const auto alpha = recursion_coefficients(s.entries(), r);
  for (std::size_t j = r; j <= s.ell(); ++j) {
    if (continue_recursion(s.entries(), alpha, j) != s[j]) return {false, std::nullopt};
  }
  return {true, alpha};
}

ExtensionResult extend_preserving_inertia(const MomentSequence& s) {
  const auto rg = recursive_generation(s);
  if (!rg.flag) return {false, std::nullopt};
  const std::size_t n = s.n();
  std::vector<Rational> ext = s.entries();
  ext.resize(2 * n + 1);
  if (s.is_odd()) ext.push_back(s[2 * n + 1]);
  const auto& alpha = *rg.alphas;
  while (ext.size() < 2 * n + 3) {
    ext.push_back(alpha.empty() ? Rational(0) : continue_recursion(ext, alpha, ext.size()));
  }
  const auto before = inertia(hankel_matrix(ext, n));
  const auto after = inertia(hankel_matrix(ext, n + 1));
  if (after.nu_minus != before.nu_minus) return {false, std::nullopt};
  return {true, std::make_pair(ext[2 * n + 1], ext[2 * n + 2])};
}

}  // namespace gnm
