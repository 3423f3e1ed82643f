#include "mklab/lorentzian.hpp"

#include <numeric>
#include <set>

#include "mklab/error.hpp"

namespace mklab {

LatticePointSet support(const ExactPoly& f) {
  LatticePointSet out;
  out.dimension = static_cast<int>(f.num_vars());
  for (const auto& [e, c] : f.terms()) out.points.push_back(e);  // map order is lexicographic
  return out;
}

bool support_is_polymatroid_base(const LatticePointSet& pts) {
  if (pts.points.empty()) return true;
  std::vector<int> table = hull_rank_table(pts);
  std::vector<int> cage;
  for (int i = 0; i < pts.dimension; ++i) cage.push_back(table[SubsetMask{1} << i]);
  try {
    const Polymatroid p = Polymatroid::from_rank_table(pts.dimension, cage, std::move(table));
    return base_points(p) == pts;
  } catch (const Error&) {
    return false;
  }
}

namespace {

void collect_alphas(const Exponents& e, std::size_t v, int left, Exponents& alpha,
                    std::set<Exponents>& out) {
  if (left == 0) {
    out.insert(alpha);
    return;
  }
  if (v == e.size()) return;
  for (int take = std::min(left, e[v]); take >= 0; --take) {
    alpha[v] = take;
    collect_alphas(e, v + 1, left - take, alpha, out);
  }
  alpha[v] = 0;
}

}  // namespace

LorentzianVerdict is_lorentzian(const ExactPoly& input) {
  const ExactPoly f = input.basis() == Basis::power ? input : convert_basis(input, Basis::power);
  if (f.is_zero()) return {};
  for (const auto& [e, c] : f.terms())
    if (c < 0) return {false, NegativeCoefficient{e, c}};
  const auto& first = f.terms().begin()->first;
  const int d = std::accumulate(first.begin(), first.end(), 0);
  for (const auto& [e, c] : f.terms())
    if (std::accumulate(e.begin(), e.end(), 0) != d) return {false, NotHomogeneous{first, e}};

  const LatticePointSet supp = support(f);
  const MConvexResult mc = is_m_convex(supp);
  if (supp.dimension <= 4 && mc.m_convex != support_is_polymatroid_base(supp))
    throw Error(ErrorCode::InternalInconsistency,
                "exchange axiom and hull reconstruction disagree on the support");
  if (!mc.m_convex) return {false, SupportNotMConvex{*mc.witness}};
  if (d < 2) return {};

  std::set<Exponents> alphas;
  Exponents alpha(f.num_vars(), 0);
  for (const auto& [e, c] : f.terms()) collect_alphas(e, 0, d - 2, alpha, alphas);
  for (const auto& a : alphas) {
    const ExactPoly q = derivative(f, a);
    if (q.is_zero()) continue;
    const Signature sig = hessian_signature(q);
    if (sig.positives > 1) return {false, BadSignature{a, sig}};
  }
  return {};
}

LorentzianVerdict is_denorm_lorentzian(const ExactPoly& f) {
  const ExactPoly p = f.basis() == Basis::power ? f : convert_basis(f, Basis::power);
  return is_lorentzian(normalize(p));
}

}  // namespace mklab
