#include "mklab/snapper.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "mklab/error.hpp"
#include "mklab/polymatroid.hpp"

namespace mklab {

namespace {

ExactPoly points_polynomial(const Matroid& m, std::span<const SubsetMask> subsets, int surplus) {
  ExactPoly out(indexed_vars("t", subsets.size()), Basis::rising);
  for_each_hall_rado_point(m, subsets, surplus,
                           [&](const LatticePoint& k, std::span<const int>) { out.add_term(k, 1); });
  return out;
}

void check_bundle(const Matroid& m, const BundleSpec& bundle) {
  if (bundle.subsets.size() != bundle.exponents.size())
    throw Error(ErrorCode::InvalidInput, "bundle subsets and exponents differ in length");
  if (!bundle.augmented && m.has_loops())
    throw Error(ErrorCode::LoopyMatroid, "non-augmented Snapper polynomials need a loopless matroid");
}

// (c t)^(k) = (ct)(ct+1)...(ct+k-1)/k! in the power basis of t.
std::vector<Rational> scaled_rising(long c, int k) {
  std::vector<Rational> poly{1};
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i] * c;
      next[i] += poly[i] * j;
    }
    poly = std::move(next);
  }
  const Rational kf(factorial(static_cast<unsigned>(k)));
  for (auto& x : poly) x /= kf;
  return poly;
}

// Adding (S, v) to a family keeps it feasible iff G[S] >= v + surplus, where
//   G[U] = min over subfamilies J of rk(U | union J) - sum_J v,
// and afterwards G'[U] = min(G[U], G[U | S] - v). Only U in the union
// closure of the subsets still to come is ever read, so the weighted sum over
// feasible points is a memoized recursion on (index, G restricted to that
// closure). Nothing is enumerated point by point.
class SlackProgram {
 public:
  using Poly = std::vector<Rational>;
  static constexpr std::size_t kStateLimit = 4'000'000;

  SlackProgram(const Matroid& m, std::vector<SubsetMask> subsets, std::vector<long> exps, int surplus)
      : m_(m), subsets_(std::move(subsets)), exps_(std::move(exps)), surplus_(surplus) {}

  ExactPoly run() {
    const std::size_t n = subsets_.size();
    closure_.assign(n + 1, {});
    keep_.assign(n, {});
    join_.assign(n, {});
    self_.assign(n, 0);
    memo_.assign(n + 1, {});
    for (std::size_t i = n; i-- > 0;) {
      const SubsetMask s = subsets_[i];
      std::vector<SubsetMask> c = closure_[i + 1];
      c.push_back(s);
      for (SubsetMask u : closure_[i + 1]) c.push_back(u | s);
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      auto index = [&c](SubsetMask u) {
        return static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), u) - c.begin());
      };
      for (SubsetMask u : closure_[i + 1]) {
        keep_[i].push_back(index(u));
        join_[i].push_back(index(u | s));
      }
      self_[i] = index(s);
      closure_[i] = std::move(c);
    }
    std::string key;
    for (SubsetMask u : closure_[0]) key.push_back(static_cast<char>(std::max(m_.rank(u), surplus_)));
    const Poly total = solve(0, key);
    ExactPoly out({"t"});
    for (std::size_t d = 0; d < total.size(); ++d) out.add_term({static_cast<int>(d)}, total[d]);
    return out;
  }

 private:
  const Poly& factor(std::size_t i, int v) {
    auto [it, fresh] = factors_.try_emplace({exps_[i], v});
    if (fresh) it->second = scaled_rising(exps_[i], v);
    return it->second;
  }

  static void add_product(Poly& acc, const Poly& a, const Poly& b) {
    if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  }

  Poly solve(std::size_t i, const std::string& key) {
    if (i == subsets_.size()) return {1};
    auto& memo = memo_[i];
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto& keep = keep_[i];
    const auto& join = join_[i];
    std::string next(keep.size(), 0);
    for (std::size_t u = 0; u < keep.size(); ++u) next[u] = key[keep[u]];
    Poly result = solve(i + 1, next);
    const int vmax = key[self_[i]] - surplus_;
    for (int v = 1; v <= vmax; ++v) {
      for (std::size_t u = 0; u < keep.size(); ++u)
        next[u] = static_cast<char>(std::min<int>(key[keep[u]], key[join[u]] - v));
      add_product(result, factor(i, v), solve(i + 1, next));
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    if (++states_ > kStateLimit)
      throw Error(ErrorCode::ComputationLimit,
                  "Snapper recursion exceeded " + std::to_string(kStateLimit) + " slack states");
    return memo.emplace(key, std::move(result)).first->second;
  }

  const Matroid& m_;
  std::vector<SubsetMask> subsets_;
  std::vector<long> exps_;
  int surplus_;
  std::vector<std::vector<SubsetMask>> closure_;
  std::vector<std::vector<std::uint32_t>> keep_, join_;
  std::vector<std::uint32_t> self_;
  std::vector<std::unordered_map<std::string, Poly>> memo_;
  std::map<std::pair<long, int>, Poly> factors_;
  std::size_t states_ = 0;
};

}  // namespace

ExactPoly snapper_aug(const Matroid& m, std::span<const SubsetMask> subsets) {
  return points_polynomial(m, subsets, 0);
}

ExactPoly snapper_nonaug(const Matroid& m, std::span<const SubsetMask> subsets) {
  if (m.has_loops())
    throw Error(ErrorCode::LoopyMatroid, "non-augmented Snapper polynomials need a loopless matroid");
  return points_polynomial(m, subsets, 1);
}

ExactPoly snapper_bundle(const Matroid& m, const BundleSpec& bundle) {
  check_bundle(m, bundle);
  // A subset with exponent zero only contributes points whose term vanishes.
  std::vector<SubsetMask> subsets;
  std::vector<long> exps;
  for (std::size_t i = 0; i < bundle.subsets.size(); ++i) {
    if (bundle.subsets[i] == 0)
      throw Error(ErrorCode::EmptySubset, "subset " + std::to_string(i) + " is empty",
                  {static_cast<std::int64_t>(i)});
    if (bundle.exponents[i] == 0) continue;
    subsets.push_back(bundle.subsets[i]);
    exps.push_back(bundle.exponents[i]);
  }
  return SlackProgram(m, std::move(subsets), std::move(exps), bundle.augmented ? 0 : 1).run();
}

ExactPoly snapper_bundle_via_multivariate(const Matroid& m, const BundleSpec& bundle) {
  check_bundle(m, bundle);
  const ExactPoly multi = bundle.augmented ? snapper_aug(m, bundle.subsets)
                                           : snapper_nonaug(m, bundle.subsets);
  return substitute_ray(convert_basis(multi, Basis::power), bundle.exponents);
}

int snapper_degree(const ExactPoly& chi) { return chi.total_degree(); }

Integer deg_top(const Matroid& m, const ExactPoly& chi) {
  const int r = m.rank();
  if (r == 0) return 0;
  const Rational value = chi.coefficient({r - 1}) * Rational(factorial(static_cast<unsigned>(r - 1)));
  if (!is_integer(value))
    throw Error(ErrorCode::NonIntegralDegree, "top intersection number " + to_string(value) +
                                                  " is not an integer");
  return value.get_num();
}

Integer deg_top(const Matroid& m, const BundleSpec& bundle) {
  return deg_top(m, snapper_bundle(m, bundle));
}

}  // namespace mklab
