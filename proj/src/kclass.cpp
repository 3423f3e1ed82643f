#include "mklab/kclass.hpp"

#include <algorithm>
#include <numeric>

#include "mklab/error.hpp"
#include "mklab/snapper.hpp"

namespace mklab {

namespace {

int weight(const LatticePoint& b) { return std::accumulate(b.begin(), b.end(), 0); }

bool dominates(const LatticePoint& hi, const LatticePoint& lo) {
  for (std::size_t i = 0; i < hi.size(); ++i)
    if (hi[i] < lo[i]) return false;
  return true;
}

}  // namespace

std::int64_t KExpansion::coefficient(const LatticePoint& b) const {
  auto it = coeffs.find(b);
  return it == coeffs.end() ? 0 : it->second;
}

std::vector<std::pair<LatticePoint, std::int64_t>> KExpansion::ordered() const {
  std::vector<std::pair<LatticePoint, std::int64_t>> out(coeffs.begin(), coeffs.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return weight(x.first) > weight(y.first);
  });
  return out;
}

KExpansion knutson_coeffs(const Polymatroid& p) {
  const LatticePointSet ind = independence_points(p);
  std::vector<const LatticePoint*> order;
  for (const auto& b : ind.points) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(),
                   [](const LatticePoint* x, const LatticePoint* y) { return weight(*x) > weight(*y); });
  const int r = p.rank();
  KExpansion out;
  out.cage.assign(p.cage().begin(), p.cage().end());
  // Layers by descending |b|; points of one layer never dominate each other.
  std::vector<std::pair<const LatticePoint*, std::int64_t>> done;
  for (const LatticePoint* b : order) {
    std::int64_t c = 1;
    if (weight(*b) < r) {
      for (const auto& [hi, ch] : done)
        if (ch != 0 && weight(*hi) > weight(*b) && dominates(*hi, *b)) c -= ch;
    }
    done.emplace_back(b, c);
    if (c != 0) out.coeffs.emplace(*b, c);
  }
  return out;
}

Integer chi_Y(const KExpansion& kx, std::span<const long> k) {
  if (k.size() != kx.cage.size())
    throw Error(ErrorCode::InvalidInput, "twist vector has the wrong length");
  Rational total = 0;
  for (const auto& [b, c] : kx.coeffs) {
    Rational term = c;
    for (std::size_t i = 0; i < b.size(); ++i) term *= binomial(Rational(k[i] + b[i]), b[i]);
    total += term;
  }
  return to_integer(total);
}

Integer chi_Y(const Polymatroid& p, std::span<const long> k) { return chi_Y(knutson_coeffs(p), k); }

ExactPoly chi_Y_poly(const Polymatroid& p) {
  ExactPoly out(indexed_vars("t", p.size()), Basis::shifted);
  for (const auto& [b, c] : knutson_coeffs(p).coeffs) out.add_term(b, c);
  return out;
}

ExactPoly twisted_k_poly(const ExactPoly& chi, std::span<const int> cage) {
  if (chi.basis() != Basis::shifted)
    throw Error(ErrorCode::BasisMismatch, "twisted K-polynomial needs the shifted basis");
  if (cage.size() != chi.num_vars())
    throw Error(ErrorCode::InvalidInput, "cage length does not match variable count");
  ExactPoly out(chi.vars());
  for (const auto& [b, c] : chi.terms()) {
    Exponents k(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] > cage[i])
        throw Error(ErrorCode::DegreeExceedsCage,
                    "exponent " + std::to_string(b[i]) + " of " + chi.vars()[i] + " exceeds cage " +
                        std::to_string(cage[i]),
                    {static_cast<std::int64_t>(i)});
      k[i] = cage[i] - b[i];
    }
    out.add_term(k, c);
  }
  return out;
}

ExactPoly g_poly(const Polymatroid& p) {
  const int r = p.rank();
  ExactPoly out(indexed_vars("t", p.size() + 1, 0));
  for (const auto& [b, c] : knutson_coeffs(p).coeffs) {
    const int lower = r - weight(b);
    Exponents e{lower};
    e.insert(e.end(), b.begin(), b.end());
    out.add_term(e, lower % 2 == 0 ? Rational(c) : Rational(-c));
  }
  return out;
}

ExactPoly h_tilde_route_a(const Matroid& m, std::span<const SubsetMask> subsets) {
  SubsetMask uni = 0;
  for (SubsetMask s : subsets) uni |= s;
  const int r = m.rank(uni);
  const ExactPoly chi = convert_basis(snapper_aug(m, subsets), Basis::shifted);
  ExactPoly a(chi.vars());
  for (const auto& [k, c] : chi.terms()) a.add_term(k, (r - weight(k)) % 2 == 0 ? c : Rational(-c));
  return homogenize(a, r, "t0");
}

ExactPoly h_tilde_route_b(const Matroid& m, std::span<const SubsetMask> subsets) {
  const Polymatroid p = restriction_polymatroid(m, subsets);
  const int s = p.spanning_index();
  if (s < 0) throw Error(ErrorCode::NoSpanningSubset, "no subset spans the union of all subsets");
  const std::vector<std::string> vars = indexed_vars("t", p.size() + 1, 0);
  const std::size_t width = vars.size();
  ExactPoly out(vars);
  for (const auto& k : base_points(p).points) {
    // t_s^{k_s} * prod_{i != s} (t_i^{k_i} + t0 t_i^{k_i - 1}), factor 1 when k_i = 0
    Exponents lead(width, 0);
    lead[s + 1] = k[s];
    ExactPoly prod(vars);
    prod.add_term(lead, 1);
    for (int i = 0; i < p.size(); ++i) {
      if (i == s || k[i] == 0) continue;
      ExactPoly factor(vars);
      Exponents e(width, 0);
      e[i + 1] = k[i];
      factor.add_term(e, 1);
      e[i + 1] = k[i] - 1;
      e[0] = 1;
      factor.add_term(e, 1);
      prod = prod * factor;
    }
    out += prod;
  }
  return out;
}

ExactPoly h_tilde(const Matroid& m, std::span<const SubsetMask> subsets) {
  ExactPoly a = h_tilde_route_a(m, subsets);
  if (restriction_polymatroid(m, subsets).spanning_index() >= 0 &&
      h_tilde_route_b(m, subsets) != a)
    throw Error(ErrorCode::InternalInconsistency, "the two H-tilde routes disagree");
  return a;
}

MatroidCaseResult matroid_case_check(const Polymatroid& n) {
  if (!n.is_matroid())
    throw Error(ErrorCode::NotAMatroidPolymatroid, "cage is not all ones");
  const Matroid mat = Matroid::from_rank_table(
      n.size(), std::vector<int>(n.rank_table().begin(), n.rank_table().end()));
  std::vector<SubsetMask> singletons;
  for (int i = 0; i < mat.size(); ++i) singletons.push_back(SubsetMask{1} << i);
  const ExactPoly h = h_tilde_route_a(mat, singletons);
  const int r = mat.rank();
  const std::size_t width = mat.size() + 1;

  auto exponent_of = [&](SubsetMask s) {
    Exponents e(width, 0);
    e[0] = r - popcount(s);
    for (int i : elements_of(s)) e[i + 1] = 1;
    return e;
  };

  std::size_t matched_terms = 0;
  for (SubsetMask s = 0; s <= mat.ground_set(); ++s) {
    if (mat.rank(s) != popcount(s)) continue;
    const Matroid contracted = minor(mat, 0, s);
    const std::vector<Rational> at{0, 1};
    const Rational expected = tutte(contracted).evaluate(std::span<const Rational>(at));
    const Rational actual = h.coefficient(exponent_of(s));
    if (expected != actual) return {false, MatroidCaseMismatch{s, expected, actual}};
    if (actual != 0) ++matched_terms;
  }
  if (matched_terms != h.terms().size()) {
    // some term is not of the form t^{e_I} t0^{r-|I|} with I independent
    for (const auto& [e, c] : h.terms()) {
      SubsetMask s = 0;
      bool square_free = true;
      for (std::size_t i = 1; i < width; ++i) {
        if (e[i] > 1) square_free = false;
        if (e[i] > 0) s |= SubsetMask{1} << (i - 1);
      }
      if (!square_free || mat.rank(s) != popcount(s) || e != exponent_of(s))
        return {false, MatroidCaseMismatch{s, 0, c}};
    }
  }
  return {};
}

}  // namespace mklab
