#pragma once

#include <span>
#include <vector>

#include "mklab/poly.hpp"
#include "mklab/rational.hpp"
#include "mklab/subset.hpp"

namespace mklab {

// Matroid on {0, ..., n-1} stored as its full rank table. Immutable once built.
class Matroid {
 public:
  // Validated constructors.
  static Matroid from_rank_table(int n, std::vector<int> table);
  static Matroid from_bases(int n, std::span<const SubsetMask> bases);
  static Matroid uniform(int r, int n);

  int size() const { return n_; }
  int rank() const { return rank_.back(); }
  int rank(SubsetMask s) const { return rank_[s]; }
  SubsetMask ground_set() const { return full_mask(n_); }
  std::span<const int> rank_table() const { return rank_; }

  bool is_loop(int i) const { return rank_[SubsetMask{1} << i] == 0; }
  bool is_coloop(int i) const;
  bool has_loops() const;
  bool has_coloops() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

  // Skips validation; only for tables that are matroids by construction.
  static Matroid trusted(int n, std::vector<int> table);

 private:
  Matroid(int n, std::vector<int> table) : n_(n), rank_(std::move(table)) {}

  int n_ = 0;
  std::vector<int> rank_;
};

SubsetMask closure(const Matroid& m, SubsetMask s);
bool is_flat(const Matroid& m, SubsetMask s);
// All flats, sorted by (cardinality, mask).
std::vector<SubsetMask> flats(const Matroid& m);

// Remaining elements keep their relative order and are renumbered from 0.
Matroid minor(const Matroid& m, SubsetMask deleted, SubsetMask contracted);
Matroid restriction(const Matroid& m, SubsetMask keep);
Matroid dual(const Matroid& m);
// Elements of b are shifted by a.size().
Matroid direct_sum(const Matroid& a, const Matroid& b);
std::vector<SubsetMask> connected_components(const Matroid& m);
bool is_connected(const Matroid& m);

std::vector<SubsetMask> bases(const Matroid& m);
std::vector<SubsetMask> circuits(const Matroid& m);  // sorted by (cardinality, mask)

// Tutte polynomial in x, y by memoized deletion-contraction.
ExactPoly tutte(const Matroid& m);
// Coefficient of x^1 y^0 in the Tutte polynomial.
Integer beta(const Matroid& m);

// Adds element n placed freely on the flat g.
Matroid principal_extension(const Matroid& m, SubsetMask g);

}  // namespace mklab
