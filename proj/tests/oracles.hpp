#pragma once
// Brute-force references and random generators shared by the unit tests.
// Nothing here calls the library routine it is meant to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/poly.hpp"
#include "mklab/polymatroid.hpp"
#include "mklab/rational.hpp"
#include "mklab/snapper.hpp"

namespace oracle {

using namespace mklab;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Column vectors over GF(2) given as bitmasks; rank by elimination.
inline int gf2_rank(std::vector<std::uint32_t> vs) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(vs.begin(), vs.end(), [bit](std::uint32_t v) { return (v >> bit) & 1U; });
    if (it == vs.end()) continue;
    const std::uint32_t pivot = *it;
    vs.erase(it);
    for (auto& v : vs)
      if ((v >> bit) & 1U) v ^= pivot;
    ++r;
  }
  return r;
}

inline Matroid binary_matroid(const std::vector<std::uint32_t>& columns) {
  const int n = static_cast<int>(columns.size());
  std::vector<int> table(std::size_t{1} << n);
  for (SubsetMask s = 0; s < table.size(); ++s) {
    std::vector<std::uint32_t> sel;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1U) sel.push_back(columns[i]);
    table[s] = gf2_rank(sel);
  }
  return Matroid::from_rank_table(n, std::move(table));
}

// Random binary matroid; loops only if allow_loops.
inline Matroid random_matroid(int nmax, bool allow_loops = false, int rmax = 4) {
  const int n = uniform_int(1, nmax);
  const int r = uniform_int(1, std::min(n, rmax));
  std::vector<std::uint32_t> cols;
  for (int i = 0; i < n; ++i) {
    std::uint32_t v = 0;
    do v = static_cast<std::uint32_t>(uniform_int(0, (1 << r) - 1));
    while (!allow_loops && v == 0);
    cols.push_back(v);
  }
  return binary_matroid(cols);
}

inline std::vector<SubsetMask> random_subsets(int n, int count) {
  std::vector<SubsetMask> out;
  for (int i = 0; i < count; ++i) out.push_back(static_cast<SubsetMask>(uniform_int(1, (1 << n) - 1)));
  return out;
}

inline std::vector<int> rank_from_bases(int n, const std::vector<SubsetMask>& bases) {
  std::vector<int> t(std::size_t{1} << n, 0);
  for (SubsetMask s = 0; s < t.size(); ++s)
    for (SubsetMask b : bases) t[s] = std::max(t[s], popcount(s & b));
  return t;
}

inline ExactPoly power_of(const ExactPoly& f, int k) {
  ExactPoly out = ExactPoly::constant(f.vars(), 1);
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

// sum_A (x-1)^{r - rk A} (y-1)^{|A| - rk A}
inline ExactPoly tutte_rank_generating(const Matroid& m) {
  const std::vector<std::string> vars{"x", "y"};
  const ExactPoly xm = ExactPoly::variable(vars, 0) - ExactPoly::constant(vars, 1);
  const ExactPoly ym = ExactPoly::variable(vars, 1) - ExactPoly::constant(vars, 1);
  ExactPoly out(vars);
  for (SubsetMask a = 0; a <= m.ground_set(); ++a)
    out += power_of(xm, m.rank() - m.rank(a)) * power_of(ym, popcount(a) - m.rank(a));
  return out;
}

// Crapo: beta = (-1)^r sum_X (-1)^{|X|} rk(X)
inline Integer beta_crapo(const Matroid& m) {
  Integer s = 0;
  for (SubsetMask x = 0; x <= m.ground_set(); ++x) s += (popcount(x) % 2 ? -1 : 1) * m.rank(x);
  return m.rank() % 2 ? Integer(-s) : s;
}

inline void for_each_box_point(const std::vector<int>& bound, const std::function<void(const LatticePoint&)>& f) {
  LatticePoint x(bound.size(), 0);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound[i]) x[i++] = 0;
    if (i == x.size()) return;
    ++x[i];
  }
}

inline bool within_polymatroid(const Polymatroid& p, const LatticePoint& x) {
  for (SubsetMask s = 1; s <= p.ground_set(); ++s) {
    int sum = 0;
    for (int i = 0; i < p.size(); ++i)
      if ((s >> i) & 1U) sum += x[i];
    if (sum > p.rank(s)) return false;
  }
  return true;
}

inline std::vector<LatticePoint> brute_points(const Polymatroid& p, bool bases_only) {
  std::vector<int> bound(p.size(), p.rank());
  std::vector<LatticePoint> out;
  for_each_box_point(bound, [&](const LatticePoint& x) {
    if (!within_polymatroid(p, x)) return;
    if (bases_only && std::accumulate(x.begin(), x.end(), 0) != p.rank()) return;
    out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LatticePoint> brute_hall_rado(const Matroid& m, const std::vector<SubsetMask>& subsets,
                                                 int surplus) {
  std::vector<int> bound(subsets.size(), m.rank());
  std::vector<LatticePoint> out;
  for_each_box_point(bound, [&](const LatticePoint& k) {
    for (SubsetMask i = 1; i < (SubsetMask{1} << subsets.size()); ++i) {
      SubsetMask u = 0;
      int sum = 0;
      for (std::size_t j = 0; j < subsets.size(); ++j)
        if ((i >> j) & 1U) {
          u |= subsets[j];
          sum += k[j];
        }
      if (m.rank(u) < surplus + sum) return;
    }
    out.push_back(k);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// sum over brute feasible points of prod (c_i t)^(k_i), evaluated at t.
inline Rational brute_bundle_value(const Matroid& m, const BundleSpec& b, long t) {
  Rational total = 0;
  for (const auto& k : brute_hall_rado(m, b.subsets, b.augmented ? 0 : 1)) {
    Rational term = 1;
    for (std::size_t i = 0; i < k.size(); ++i)
      term *= binomial(Rational(b.exponents[i] * t + k[i] - 1), k[i]);
    total += term;
  }
  return total;
}

// Degree-i monomials in s variables as exponent vectors.
inline std::vector<std::vector<int>> monomials(int s, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(s, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == s - 1) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[v] = a;
      rec(v + 1, left - a);
    }
  };
  if (s > 0) rec(0, degree);
  return out;
}

// Is there an order ideal of monomials in v[1] variables with exactly v[i]
// monomials of degree i? Exhaustive over choices level by level.
inline bool multicomplex_exists(const std::vector<int>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (int x : v)
    if (x < 0) return false;
  if (v.size() == 1) return true;
  const int s = v[1];
  std::function<bool(std::size_t, const std::vector<std::vector<int>>&)> level =
      [&](std::size_t deg, const std::vector<std::vector<int>>& prev) -> bool {
    if (deg == v.size()) return true;
    std::vector<std::vector<int>> allowed;
    for (const auto& mono : monomials(s, static_cast<int>(deg))) {
      bool ok = true;
      for (int i = 0; i < s && ok; ++i) {
        if (mono[i] == 0) continue;
        auto d = mono;
        --d[i];
        ok = std::find(prev.begin(), prev.end(), d) != prev.end();
      }
      if (ok) allowed.push_back(mono);
    }
    const int want = v[deg];
    if (want > static_cast<int>(allowed.size())) return false;
    std::vector<int> pick(want);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::vector<int>> chosen;
      for (int i : pick) chosen.push_back(allowed[i]);
      if (level(deg + 1, chosen)) return true;
      int i = want - 1;
      while (i >= 0 && pick[i] == static_cast<int>(allowed.size()) - want + i) --i;
      if (i < 0) return false;
      ++pick[i];
      for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
  };
  if (s == 0) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != 0) return false;
    return true;
  }
  return level(2, monomials(s, 1));
}

// Lattice points of k B(P) by box enumeration.
inline std::size_t ehrhart_count(const Polymatroid& p, int k) {
  std::vector<int> table(p.rank_table().begin(), p.rank_table().end());
  std::vector<int> cage(p.cage().begin(), p.cage().end());
  for (auto& x : table) x *= k;
  for (auto& x : cage) x *= k;
  return brute_points(Polymatroid::trusted(p.size(), cage, table), true).size();
}

}  // namespace oracle
