#include "mklab/signature.hpp"

#include <numeric>

#include "mklab/error.hpp"

namespace mklab {

Signature signature_of(SymmetricMatrix a) {
  const std::size_t n = a.size();
  Signature sig;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;

  auto eliminate_pivot = [&](std::size_t p) {
    const Rational piv = a[p][p];
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a[i][p] == 0) continue;
      const Rational f = a[i][p] / piv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && j != p) a[i][j] -= f * a[p][j];
    }
    done[p] = true;
    --remaining;
  };

  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a[i][i] != 0) p = i;
    if (p != n) {
      (a[p][p] > 0 ? sig.positives : sig.negatives) += 1;
      eliminate_pivot(p);
      continue;
    }
    std::size_t r = n, c = n;
    for (std::size_t i = 0; i < n && r == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[i] && !done[j] && a[i][j] != 0) {
          r = i;
          c = j;
          break;
        }
    if (r == n) break;
    // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]]; Schur complement
    // A_kl -= (a_kr a_lc + a_kc a_lr) / b.
    const Rational b = a[r][c];
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || k == r || k == c) continue;
      for (std::size_t l = k; l < n; ++l) {
        if (done[l] || l == r || l == c) continue;
        const Rational delta = (a[k][r] * a[l][c] + a[k][c] * a[l][r]) / b;
        a[k][l] -= delta;
        if (l != k) a[l][k] = a[k][l];
      }
    }
    done[r] = done[c] = true;
    remaining -= 2;
    sig.positives += 1;
    sig.negatives += 1;
  }
  sig.zeros = static_cast<int>(n) - sig.positives - sig.negatives;
  return sig;
}

SymmetricMatrix hessian(const ExactPoly& q) {
  const std::size_t n = q.num_vars();
  SymmetricMatrix h(n, std::vector<Rational>(n, 0));
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      for (int t = 0; t < e[v]; ++t) idx.push_back(v);
    if (idx.size() != 2) throw Error(ErrorCode::NotQuadratic, "term of degree other than 2");
    if (idx[0] == idx[1]) {
      h[idx[0]][idx[0]] += 2 * c;
    } else {
      h[idx[0]][idx[1]] += c;
      h[idx[1]][idx[0]] += c;
    }
  }
  return h;
}

Signature hessian_signature(const ExactPoly& q) {
  if (q.basis() != Basis::power)
    throw Error(ErrorCode::NotQuadratic, "quadratic form must be in the power basis");
  if (!q.is_zero() && (q.total_degree() != 2 || !q.is_homogeneous()))
    throw Error(ErrorCode::NotQuadratic, "polynomial is not a quadratic form");
  return signature_of(hessian(q));
}

}  // namespace mklab
