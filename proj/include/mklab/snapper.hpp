#pragma once

#include <span>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/poly.hpp"

namespace mklab {

// Laurent monomial prod L_S^{c_S}, in the augmented or non-augmented ring.
struct BundleSpec {
  std::vector<SubsetMask> subsets;
  std::vector<long> exponents;
  bool augmented = false;
};

// Sum of t^(k) over Hall-Rado feasible k; rising basis, variables t1..tm.
ExactPoly snapper_aug(const Matroid& m, std::span<const SubsetMask> subsets);
// Same with the dragon condition; M must be loopless.
ExactPoly snapper_nonaug(const Matroid& m, std::span<const SubsetMask> subsets);

// t -> chi(L^t), univariate power basis in "t". Computed by a memoized
// recursion on the Hall-Rado slack table, without listing feasible points.
ExactPoly snapper_bundle(const Matroid& m, const BundleSpec& bundle);

// The literal route: multivariate Snapper, power basis, then substitute_ray.
// Kept as a cross-check; it materializes every feasible point.
ExactPoly snapper_bundle_via_multivariate(const Matroid& m, const BundleSpec& bundle);

int snapper_degree(const ExactPoly& chi);
// (r-1)! times the coefficient of t^(r-1), r = rk(M).
Integer deg_top(const Matroid& m, const ExactPoly& chi);
Integer deg_top(const Matroid& m, const BundleSpec& bundle);

}  // namespace mklab
