#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/poly.hpp"
#include "mklab/polymatroid.hpp"

namespace mklab {

// [O_{Y_P}] = sum_b c_b [O_{Y_b}]; only nonzero coefficients are stored.
struct KExpansion {
  std::vector<int> cage;
  std::map<LatticePoint, std::int64_t> coeffs;

  std::int64_t coefficient(const LatticePoint& b) const;
  // (sum b descending, then lexicographic)
  std::vector<std::pair<LatticePoint, std::int64_t>> ordered() const;
};

// Top layer is the B(P) indicator; below it c_b = 1 - sum_{b' > b} c_{b'}
// over independence points b' (componentwise >=, b' != b). Points outside
// I(P) get zero.
KExpansion knutson_coeffs(const Polymatroid& p);

// sum_b c_b prod binom(k_i + b_i, b_i)
Integer chi_Y(const KExpansion& kx, std::span<const long> k);
Integer chi_Y(const Polymatroid& p, std::span<const long> k);
// Coefficient c_b on prod t_i^[b_i]; variables t1..tm.
ExactPoly chi_Y_poly(const Polymatroid& p);

// sum_k c_{a-k} t^k for chi = sum_k c_k t^[k].
ExactPoly twisted_k_poly(const ExactPoly& chi, std::span<const int> cage);

// sum over I(P) of c_k (-t0)^{r-|k|} t^k; variables t0, t1..tm.
ExactPoly g_poly(const Polymatroid& p);

// Binomial transform of the augmented Snapper polynomial: shifted-basis
// coefficients with signs (-1)^{r-|k|} removed, homogenized by t0.
ExactPoly h_tilde_route_a(const Matroid& m, std::span<const SubsetMask> subsets);
// Closed form over B(P) using a spanning subset; Error(NoSpanningSubset) otherwise.
ExactPoly h_tilde_route_b(const Matroid& m, std::span<const SubsetMask> subsets);
// Route A; when a spanning subset exists route B is computed as well and
// any disagreement raises InternalInconsistency.
ExactPoly h_tilde(const Matroid& m, std::span<const SubsetMask> subsets);

struct MatroidCaseMismatch {
  SubsetMask independent_set = 0;  // or the support of a stray term
  Rational expected;
  Rational actual;
};

struct MatroidCaseResult {
  bool ok = true;
  std::optional<MatroidCaseMismatch> mismatch;
};

// For a matroid N, the coefficient of t^{e_I} t0^{r-|I|} in H-tilde equals
// T_{N/I}(0,1) for each independent I, and no other terms occur.
MatroidCaseResult matroid_case_check(const Polymatroid& n);

}  // namespace mklab
