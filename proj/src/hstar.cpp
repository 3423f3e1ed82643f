#include "mklab/hstar.hpp"

#include <algorithm>
#include <climits>

#include "mklab/error.hpp"

namespace mklab {

namespace {

Integer evaluate_integer(const ExactPoly& chi, long t) {
  const long at[] = {t};
  return to_integer(chi.evaluate(std::span<const long>(at)));
}

void require_loopless(const Matroid& m, const char* what) {
  if (m.has_loops()) throw Error(ErrorCode::LoopyMatroid, std::string(what) + " needs a loopless matroid");
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "value " + z.get_str() + " is too large");
  return z.get_si();
}

}  // namespace

HStarReport hstar_from_snapper(const ExactPoly& input) {
  if (input.num_vars() != 1) throw Error(ErrorCode::InvalidInput, "h* needs a univariate polynomial");
  HStarReport rep;
  rep.snapper = input.basis() == Basis::power ? input : convert_basis(input, Basis::power);
  rep.degree = snapper_degree(rep.snapper);
  if (rep.degree < 0) {
    rep.macaulay = {false, 0};
    return rep;
  }
  const int d = rep.degree;
  std::vector<Integer> values;
  for (long t = 0; t <= d + 3; ++t) values.push_back(evaluate_integer(rep.snapper, t));

  // coefficient of q^n in (sum_t chi(t) q^t)(1 - q)^{d+1}
  auto series = [&](int n) {
    Integer s = 0;
    for (int j = 0; j <= std::min(n, d + 1); ++j) {
      const Integer term = binomial(d + 1, j) * values[n - j];
      if (j % 2 == 0) s += term; else s -= term;
    }
    return s;
  };
  for (int k = 0; k <= d; ++k) rep.hstar.push_back(series(k));

  for (int n = d + 1; n <= d + 3; ++n)
    if (series(n) != 0)
      throw Error(ErrorCode::InternalInconsistency,
                  "series numerator has a nonzero term past degree " + std::to_string(d));
  Integer top = evaluate_integer(rep.snapper, -1);
  if (d % 2 == 1) top = -top;
  if (top != rep.hstar[d])
    throw Error(ErrorCode::InternalInconsistency, "h*_d differs from (-1)^d chi(-1)");
  rep.top_identity_checked = true;
  rep.macaulay = is_macaulay(rep.hstar);
  return rep;
}

HStarReport hstar_vector(const Matroid& m, const BundleSpec& bundle) {
  if (!bundle.augmented) require_loopless(m, "a non-augmented bundle");
  return hstar_from_snapper(snapper_bundle(m, bundle));
}

MacaulayRep macaulay_rep(const Integer& n, int d) {
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "Macaulay representation needs n >= 1");
  if (d <= 0) throw Error(ErrorCode::InvalidInput, "Macaulay representation needs d >= 1");
  MacaulayRep rep{n, d, {}};
  Integer left = n;
  for (int i = d; i >= 1 && left > 0; --i) {
    // largest k with binom(k, i) <= left; binom(i, i) = 1 <= left
    long lo = i, hi = i + 1;
    while (binomial(hi, i) <= left) {
      lo = hi;
      if (hi > LONG_MAX / 2) throw Error(ErrorCode::InvalidInput, "value is too large");
      hi *= 2;
    }
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (binomial(mid, i) <= left) lo = mid; else hi = mid;
    }
    rep.binomials.emplace_back(Integer(lo), i);
    left -= binomial(lo, i);
  }
  return rep;
}

Integer macaulay_upper(const Integer& n, int d) {
  Integer out = 0;
  for (const auto& [k, i] : macaulay_rep(n, d).binomials) out += binomial(to_long(k) + 1, i + 1);
  return out;
}

MacaulayVerdict is_macaulay(std::span<const Integer> v) {
  if (v.empty()) throw Error(ErrorCode::InvalidInput, "empty vector");
  if (v[0] != 1) return {false, 0};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < 0) return {false, i};
    if (i >= 2) {
      const int t = static_cast<int>(i - 1);
      const Integer bound = v[t] == 0 ? Integer(0) : macaulay_upper(v[t], t);
      if (v[i] > bound) return {false, i};
    }
  }
  return {};
}

std::map<SubsetMask, Integer> minkowski_coeffs_dual(const Matroid& m) {
  require_loopless(m, "the Minkowski decomposition");
  std::map<SubsetMask, Integer> acc;
  for (SubsetMask s = 1; s <= m.ground_set() && s != 0; ++s) {
    if (popcount(s) < 2) continue;
    const Matroid part = restriction(m, s);
    if (!is_connected(part)) continue;  // beta vanishes
    Integer b = beta(part);
    if (b == 0) continue;
    if ((popcount(s) - m.rank(s) + 1) % 2 != 0) b = -b;
    acc[closure(m, s)] += b;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

std::map<SubsetMask, Integer> flat_coefficients(const Matroid& m, const Polymatroid& p) {
  require_loopless(m, "bundle extraction");
  if (p.size() != m.size())
    throw Error(ErrorCode::InvalidInput, "polymatroid and matroid have different ground sets");
  const SubsetMask e = m.ground_set();
  std::vector<std::pair<SubsetMask, Integer>> solved;  // all nonempty flats, by cardinality
  for (SubsetMask f : flats(m)) {
    if (f == 0) continue;
    Integer c = p.rank() - p.rank(e & ~f);
    for (const auto& [g, cg] : solved)
      if (is_subset(g, f)) c -= cg;
    solved.emplace_back(f, c);
  }
  std::map<SubsetMask, Integer> out;
  for (auto& [f, c] : solved)
    if (c != 0) out.emplace(f, std::move(c));
  return out;
}

BundleSpec bundle_from_polymatroid(const Matroid& m, const Polymatroid& p) {
  const auto coeffs = flat_coefficients(m, p);
  BundleSpec out;
  for (SubsetMask f : flats(m)) {
    auto it = coeffs.find(f);
    if (it == coeffs.end()) continue;
    out.subsets.push_back(f);
    out.exponents.push_back(to_long(it->second));
  }
  return out;
}

Polymatroid dual_polymatroid(const Matroid& m) { return Polymatroid::from_matroid(dual(m)); }

Polymatroid nabla_polymatroid(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "the reflected simplex needs n >= 1");
  return Polymatroid::from_matroid(Matroid::uniform(n - 1, n));
}

namespace {

void require_no_loop_or_coloop(const Matroid& m) {
  if (m.has_loops() || m.has_coloops())
    throw Error(ErrorCode::HasLoopOrColoop, "omega needs a matroid without loops and coloops");
}

Integer signed_value_at_minus_one(const Matroid& m, int sign_exponent) {
  const ExactPoly chi = snapper_bundle(m, bundle_from_polymatroid(m, dual_polymatroid(m)));
  Integer v = evaluate_integer(chi, -1);
  if (sign_exponent % 2 != 0) v = -v;
  return v;
}

}  // namespace

Integer omega(const Matroid& m) {
  require_no_loop_or_coloop(m);
  Integer out = 1;
  for (SubsetMask c : connected_components(m)) {
    const Matroid part = restriction(m, c);
    out *= signed_value_at_minus_one(part, part.rank() - 1);
    if (out == 0) break;
  }
  return out;
}

Integer omega_direct(const Matroid& m) {
  require_no_loop_or_coloop(m);
  const int c = static_cast<int>(connected_components(m).size());
  return signed_value_at_minus_one(m, m.rank() - c);
}

SimplicialHypothesis simplicially_positive_hypothesis(const Matroid& m) {
  require_no_loop_or_coloop(m);
  const auto coeffs = minkowski_coeffs_dual(m);
  SimplicialHypothesis out;
  for (SubsetMask f : flats(m)) {
    if (m.rank(f) < 2 || !is_connected(restriction(m, f))) continue;
    auto it = coeffs.find(f);
    FlatSign fs{f, it == coeffs.end() ? Integer(0) : it->second};
    if (fs.coefficient < 0) out.holds = false;
    out.flats.push_back(std::move(fs));
  }
  return out;
}

std::vector<Integer> bc_hvector(const Matroid& m, std::span<const int> order) {
  require_loopless(m, "the broken circuit complex");
  const int n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty ground set");
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::InvalidInput, "element order has the wrong length");
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    const int e = order[k];
    if (e < 0 || e >= n || pos[e] != -1)
      throw Error(ErrorCode::InvalidInput, "element order is not a permutation");
    pos[e] = k;
  }
  std::vector<SubsetMask> broken;
  for (SubsetMask c : circuits(m)) {
    int least = -1;
    for (int e : elements_of(c))
      if (least < 0 || pos[e] < pos[least]) least = e;
    broken.push_back(c & ~(SubsetMask{1} << least));
  }
  const int r = m.rank();
  const SubsetMask ground = m.ground_set() & ~(SubsetMask{1} << order[0]);
  std::vector<Integer> f(r, 0);
  // enumerate subsets of `ground`
  SubsetMask s = 0;
  do {
    const bool face = std::none_of(broken.begin(), broken.end(),
                                   [s](SubsetMask b) { return is_subset(b, s); });
    if (face) {
      const int size = popcount(s);
      if (size >= r) throw Error(ErrorCode::InternalInconsistency, "broken circuit complex face too large");
      f[size] += 1;
    }
    s = (s - ground) & ground;
  } while (s != 0);

  const int dim = r - 1;
  std::vector<Integer> h(r, 0);
  for (int k = 0; k <= dim; ++k)
    for (int i = 0; i <= k; ++i) {
      const Integer term = binomial(dim - i, k - i) * f[i];
      if ((k - i) % 2 == 0) h[k] += term; else h[k] -= term;
    }
  return h;
}

MonotonicityReport monotonicity_check(const Matroid& m, const Polymatroid& p1, const Polymatroid& p2) {
  if (p1.size() != m.size() || p2.size() != m.size())
    throw Error(ErrorCode::InvalidInput, "polymatroids and matroid have different ground sets");
  if (p1.rank() != p2.rank())
    throw Error(ErrorCode::NotNested, "total ranks differ",
                {p1.rank(), p2.rank()});
  for (SubsetMask s = 0; s <= p1.ground_set(); ++s)
    if (p1.rank(s) > p2.rank(s))
      throw Error(ErrorCode::NotNested, "rank of " + describe_subset(s) + " is larger in the first polymatroid",
                  {static_cast<std::int64_t>(s)});
  const LatticePointSet b2 = base_points(p2);
  for (const auto& x : base_points(p1).points)
    if (!b2.contains(x)) throw Error(ErrorCode::InternalInconsistency, "base point escapes despite rank domination");
  const LatticePointSet i2 = independence_points(p2);
  for (const auto& x : independence_points(p1).points)
    if (!i2.contains(x))
      throw Error(ErrorCode::InternalInconsistency, "independence point escapes despite rank domination");

  MonotonicityReport rep;
  rep.first = hstar_vector(m, bundle_from_polymatroid(m, p1));
  rep.second = hstar_vector(m, bundle_from_polymatroid(m, p2));
  const std::size_t len = std::max(rep.first.hstar.size(), rep.second.hstar.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Integer a = i < rep.first.hstar.size() ? rep.first.hstar[i] : Integer(0);
    const Integer b = i < rep.second.hstar.size() ? rep.second.hstar[i] : Integer(0);
    rep.comparison.push_back(sgn(Integer(b - a)));
    if (a > b) rep.componentwise_le = false;
  }
  return rep;
}

}  // namespace mklab
