#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/subset.hpp"

namespace mklab {

using LatticePoint = std::vector<int>;

// Integer points, sorted lexicographically, no duplicates.
struct LatticePointSet {
  int dimension = 0;
  std::vector<LatticePoint> points;

  bool contains(const LatticePoint& p) const;
  std::size_t size() const { return points.size(); }
  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

class Polymatroid {
 public:
  static Polymatroid from_rank_table(int m, std::vector<int> cage, std::vector<int> table);
  // Matroid viewed as a polymatroid with cage (1, ..., 1).
  static Polymatroid from_matroid(const Matroid& m);

  int size() const { return m_; }
  int rank() const { return rank_.back(); }
  int rank(SubsetMask s) const { return rank_[s]; }
  std::span<const int> cage() const { return cage_; }
  std::span<const int> rank_table() const { return rank_; }
  SubsetMask ground_set() const { return full_mask(m_); }

  bool is_matroid() const;
  // Some i with rk({i}) = rk([m]), or -1.
  int spanning_index() const;

  friend bool operator==(const Polymatroid&, const Polymatroid&) = default;

  // Skips validation; only for tables that are polymatroids by construction.
  static Polymatroid trusted(int m, std::vector<int> cage, std::vector<int> table);

 private:
  Polymatroid(int m, std::vector<int> cage, std::vector<int> table)
      : m_(m), cage_(std::move(cage)), rank_(std::move(table)) {}

  int m_ = 0;
  std::vector<int> cage_;
  std::vector<int> rank_;
};

// rk(I) = rk_M(union of S_i, i in I), cage a_i = |S_i|.
Polymatroid restriction_polymatroid(const Matroid& m, std::span<const SubsetMask> subsets);

// Calls visit(k, support) for every k >= 0 with
//   rk_M(union_{i in I} S_i) >= surplus + sum_{i in I} k_i  for all nonempty I.
// surplus 0 is the Hall-Rado condition, surplus 1 the dragon version. Points
// arrive in depth-first order, not sorted. Throws ComputationLimit past `limit`.
using HallRadoVisitor = std::function<void(const LatticePoint& k, std::span<const int> support)>;
inline constexpr std::uint64_t kDefaultPointLimit = 40'000'000;
void for_each_hall_rado_point(const Matroid& m, std::span<const SubsetMask> subsets, int surplus,
                              const HallRadoVisitor& visit,
                              std::uint64_t limit = kDefaultPointLimit);
LatticePointSet hall_rado_points(const Matroid& m, std::span<const SubsetMask> subsets,
                                 int surplus);

// Feasible k: rk_M(union_{i in I} S_i) >= 1 + sum_{i in I} k_i for every nonempty I.
// The rank table is the maximum of sum_{i in I} k_i over feasible k.
Polymatroid dhr_polymatroid(const Matroid& m, std::span<const SubsetMask> subsets);

LatticePointSet base_points(const Polymatroid& p);
LatticePointSet independence_points(const Polymatroid& p);

// Dimension of the base polytope: m minus the number of separator components.
int base_polytope_dimension(const Polymatroid& p);

struct Lift {
  Matroid matroid;
  std::vector<SubsetMask> blocks;
};

// Matroid on sum(a_i) elements with consecutive blocks S_i of size a_i whose
// block-union ranks reproduce rk_P.
Lift multisymmetric_lift(const Polymatroid& p);

struct MConvexWitness {
  enum class Reason { unequal_sum, negative_coordinate, exchange };
  Reason reason;
  LatticePoint alpha;
  LatticePoint beta;
  int index = -1;  // coordinate i with alpha_i > beta_i (exchange failures)
};

struct MConvexResult {
  bool m_convex = true;
  std::optional<MConvexWitness> witness;
};

MConvexResult is_m_convex(const LatticePointSet& points);

// Polymatroid with rank I -> max_{x in A} sum_{i in I} x_i, the candidate whose
// base polytope is the convex hull of A when A is M-convex. Cage is the
// coordinatewise maximum.
std::vector<int> hull_rank_table(const LatticePointSet& points);

}  // namespace mklab
