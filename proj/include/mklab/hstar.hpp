#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/poly.hpp"
#include "mklab/polymatroid.hpp"
#include "mklab/snapper.hpp"

namespace mklab {

struct MacaulayVerdict {
  bool macaulay = true;
  std::optional<std::size_t> violation_index;
};

struct HStarReport {
  ExactPoly snapper;
  int degree = 0;
  std::vector<Integer> hstar;
  MacaulayVerdict macaulay;
  bool top_identity_checked = false;
};

// h*_k = sum_{j=0}^{k} (-1)^j binom(d+1, j) chi(k-j). Also confirms
// h*_d = (-1)^d chi(-1) and the series identity up to q^{d+3}; a failure
// there is an InternalInconsistency.
HStarReport hstar_from_snapper(const ExactPoly& chi);
HStarReport hstar_vector(const Matroid& m, const BundleSpec& bundle);

struct MacaulayRep {
  Integer n;
  int d = 0;
  std::vector<std::pair<Integer, int>> binomials;  // (k_i, i), i descending
};

MacaulayRep macaulay_rep(const Integer& n, int d);
// n^<d> = sum binom(k_i + 1, i + 1)
Integer macaulay_upper(const Integer& n, int d);
// v_0 = 1, v_i >= 0, v_{t+1} <= v_t^<t> for t >= 1.
MacaulayVerdict is_macaulay(std::span<const Integer> v);

// c_1(L_{B(M^dual)}) in the h_F generators: each S with |S| >= 2 contributes
// (-1)^{|S| - rk S + 1} beta(M|S) to its closure. Nonzero entries only.
std::map<SubsetMask, Integer> minkowski_coeffs_dual(const Matroid& m);

// Flat-supported c_F with sum_{nonempty flats G <= F} c_G = rk_P(E) - rk_P(E - F)
// for every nonempty flat F. Nonzero entries only.
std::map<SubsetMask, Integer> flat_coefficients(const Matroid& m, const Polymatroid& p);
// The same coefficients as a non-augmented bundle over the flats.
BundleSpec bundle_from_polymatroid(const Matroid& m, const Polymatroid& p);

Polymatroid dual_polymatroid(const Matroid& m);
// The polymatroid of U_{n-1,n}, whose base polytope is the reflected simplex.
Polymatroid nabla_polymatroid(int n);

// Product of (-1)^{r_j - 1} chi_j(-1) over connected components, chi_j the
// Snapper polynomial of the B(M_j^dual) bundle.
Integer omega(const Matroid& m);
// (-1)^{r - c} chi(M, L^{-1}) on the whole matroid, without splitting.
Integer omega_direct(const Matroid& m);

struct FlatSign {
  SubsetMask flat = 0;
  Integer coefficient;
};

struct SimplicialHypothesis {
  bool holds = true;
  std::vector<FlatSign> flats;  // connected flats of rank >= 2
};

SimplicialHypothesis simplicially_positive_hypothesis(const Matroid& m);

// order lists the elements from smallest to largest.
std::vector<Integer> bc_hvector(const Matroid& m, std::span<const int> order);

struct MonotonicityReport {
  HStarReport first;
  HStarReport second;
  std::vector<int> comparison;  // sign of second_i - first_i, shorter vector padded by zeros
  bool componentwise_le = true;
};

MonotonicityReport monotonicity_check(const Matroid& m, const Polymatroid& p1, const Polymatroid& p2);

}  // namespace mklab
