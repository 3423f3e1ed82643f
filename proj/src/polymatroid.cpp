#include "mklab/polymatroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mklab/error.hpp"
#include "mklab/rank_table.hpp"

namespace mklab {

bool LatticePointSet::contains(const LatticePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

namespace {

void check_size(int m) {
  if (m < 0 || m > kMaxGroundSet)
    throw Error(ErrorCode::SizeExceeded,
                "size " + std::to_string(m) + " exceeds the cap of " + std::to_string(kMaxGroundSet),
                {m});
}

void check_subsets(const Matroid& m, std::span<const SubsetMask> subsets) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i] == 0)
      throw Error(ErrorCode::EmptySubset, "subset " + std::to_string(i) + " is empty",
                  {static_cast<std::int64_t>(i)});
    if (!is_subset(subsets[i], m.ground_set()))
      throw Error(ErrorCode::InvalidInput,
                  "subset " + describe_subset(subsets[i]) + " leaves the ground set");
  }
}

LatticePointSet sorted_set(int dimension, std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {dimension, std::move(points)};
}

}  // namespace

Polymatroid Polymatroid::trusted(int m, std::vector<int> cage, std::vector<int> table) {
  return Polymatroid(m, std::move(cage), std::move(table));
}

Polymatroid Polymatroid::from_rank_table(int m, std::vector<int> cage, std::vector<int> table) {
  check_size(m);
  if (cage.size() != static_cast<std::size_t>(m))
    throw Error(ErrorCode::InvalidInput, "cage must have m entries");
  if (table.size() != (std::size_t{1} << m))
    throw Error(ErrorCode::InvalidInput, "rank table must have 2^m entries");
  rank_table::check_axioms(m, table, false);
  for (int i = 0; i < m; ++i)
    if (table[SubsetMask{1} << i] > cage[i])
      throw Error(ErrorCode::CageViolation,
                  "rk({" + std::to_string(i) + "}) = " + std::to_string(table[SubsetMask{1} << i]) +
                      " exceeds cage entry " + std::to_string(cage[i]),
                  {i});
  return Polymatroid(m, std::move(cage), std::move(table));
}

Polymatroid Polymatroid::from_matroid(const Matroid& m) {
  return Polymatroid(m.size(), std::vector<int>(m.size(), 1),
                     std::vector<int>(m.rank_table().begin(), m.rank_table().end()));
}

bool Polymatroid::is_matroid() const {
  return std::all_of(cage_.begin(), cage_.end(), [](int a) { return a == 1; });
}

int Polymatroid::spanning_index() const {
  for (int i = 0; i < m_; ++i)
    if (rank_[SubsetMask{1} << i] == rank()) return i;
  return -1;
}

Polymatroid restriction_polymatroid(const Matroid& m, std::span<const SubsetMask> subsets) {
  check_subsets(m, subsets);
  const int k = static_cast<int>(subsets.size());
  check_size(k);
  std::vector<SubsetMask> unions(std::size_t{1} << k, 0);
  std::vector<int> table(unions.size(), 0);
  for (SubsetMask i = 1; i < unions.size(); ++i) {
    unions[i] = unions[i & (i - 1)] | subsets[std::countr_zero(i)];
    table[i] = m.rank(unions[i]);
  }
  std::vector<int> cage;
  for (SubsetMask s : subsets) cage.push_back(popcount(s));
  return Polymatroid::trusted(k, std::move(cage), std::move(table));
}

namespace {

struct Family {
  SubsetMask uni;
  int sum;
};

class HallRadoWalker {
 public:
  HallRadoWalker(const Matroid& m, std::span<const SubsetMask> subsets, int surplus,
                 const HallRadoVisitor& visit, std::uint64_t limit)
      : m_(m), subsets_(subsets), surplus_(surplus), visit_(visit), limit_(limit),
        k_(subsets.size(), 0), budget_(m.rank() - surplus) {}

  void run() {
    // A subset of rank below the surplus violates its own condition at k = 0,
    // and then at every k. Otherwise conditions on unsupported indices are
    // implied by the supported ones.
    for (SubsetMask s : subsets_)
      if (m_.rank(s) < surplus_) return;
    std::vector<Family> families{{0, 0}};
    walk(0, families, 0);
  }

 private:
  void walk(std::size_t start, const std::vector<Family>& families, int total) {
    if (++count_ > limit_)
      throw Error(ErrorCode::ComputationLimit,
                  "Hall-Rado enumeration exceeded " + std::to_string(limit_) + " points");
    visit_(k_, support_);
    if (total >= budget_) return;
    std::vector<Family> next(families.size() * 2);
    for (std::size_t i = start; i < subsets_.size(); ++i) {
      int vmax = budget_ - total;
      for (const Family& f : families) {
        vmax = std::min(vmax, m_.rank(f.uni | subsets_[i]) - surplus_ - f.sum);
        if (vmax <= 0) break;
      }
      if (vmax <= 0) continue;
      support_.push_back(static_cast<int>(i));
      for (int v = 1; v <= vmax; ++v) {
        for (std::size_t f = 0; f < families.size(); ++f) {
          next[f] = families[f];
          next[families.size() + f] = {families[f].uni | subsets_[i], families[f].sum + v};
        }
        k_[i] = v;
        walk(i + 1, next, total + v);
      }
      k_[i] = 0;
      support_.pop_back();
    }
  }

  const Matroid& m_;
  std::span<const SubsetMask> subsets_;
  int surplus_;
  const HallRadoVisitor& visit_;
  std::uint64_t limit_;
  LatticePoint k_;
  std::vector<int> support_;
  int budget_;
  std::uint64_t count_ = 0;
};

}  // namespace

void for_each_hall_rado_point(const Matroid& m, std::span<const SubsetMask> subsets, int surplus,
                              const HallRadoVisitor& visit, std::uint64_t limit) {
  check_subsets(m, subsets);
  HallRadoWalker(m, subsets, surplus, visit, limit).run();
}

LatticePointSet hall_rado_points(const Matroid& m, std::span<const SubsetMask> subsets,
                                 int surplus) {
  std::vector<LatticePoint> pts;
  for_each_hall_rado_point(m, subsets, surplus,
                           [&](const LatticePoint& k, std::span<const int>) { pts.push_back(k); });
  return sorted_set(static_cast<int>(subsets.size()), std::move(pts));
}

Polymatroid dhr_polymatroid(const Matroid& m, std::span<const SubsetMask> subsets) {
  if (m.has_loops()) throw Error(ErrorCode::LoopyMatroid, "dragon Hall-Rado needs a loopless matroid");
  check_subsets(m, subsets);
  const int k = static_cast<int>(subsets.size());
  check_size(k);
  const LatticePointSet feasible = hall_rado_points(m, subsets, 1);
  // best[J] = largest coordinate sum among feasible points supported exactly on J,
  // then closed upward: rk'(I) = max over J subset of I.
  std::vector<int> table(std::size_t{1} << k, 0);
  for (const auto& p : feasible.points) {
    SubsetMask supp = 0;
    int sum = 0;
    for (int i = 0; i < k; ++i)
      if (p[i] > 0) {
        supp |= SubsetMask{1} << i;
        sum += p[i];
      }
    table[supp] = std::max(table[supp], sum);
  }
  for (int i = 0; i < k; ++i)
    for (SubsetMask s = 0; s < table.size(); ++s)
      if (contains(s, i)) table[s] = std::max(table[s], table[s & ~(SubsetMask{1} << i)]);
  std::vector<int> cage;
  for (SubsetMask s : subsets) cage.push_back(popcount(s));
  Polymatroid p = Polymatroid::from_rank_table(k, std::move(cage), std::move(table));
  if (independence_points(p) != feasible)
    throw Error(ErrorCode::InternalInconsistency,
                "dragon Hall-Rado points are not the independence points of their rank table");
  return p;
}

namespace {

// Depth-first over coordinates; sums[I] tracks sum_{i in I} x_i for I inside
// the placed prefix, and the constraint for I is checked when its largest
// element is placed.
class PointWalker {
 public:
  PointWalker(const Polymatroid& p, bool bases_only)
      : p_(p), bases_only_(bases_only), x_(p.size(), 0), sums_(std::size_t{1} << p.size(), 0) {
    tail_capacity_.assign(p.size() + 1, 0);
    for (int i = p.size() - 1; i >= 0; --i)
      tail_capacity_[i] = tail_capacity_[i + 1] + p.rank(SubsetMask{1} << i);
  }

  std::vector<LatticePoint> run() {
    walk(0, 0);
    return std::move(out_);
  }

 private:
  void walk(int i, int total) {
    const int m = p_.size();
    if (i == m) {
      if (!bases_only_ || total == p_.rank()) out_.push_back(x_);
      return;
    }
    if (bases_only_ && total + tail_capacity_[i] < p_.rank()) return;
    const SubsetMask bit = SubsetMask{1} << i;
    const int top = std::min(p_.rank(bit), p_.rank() - total);
    for (int v = 0; v <= top; ++v) {
      bool ok = true;
      for (SubsetMask low = 0; low < bit; ++low) {
        const int s = sums_[low] + v;
        if (s > p_.rank(low | bit)) {
          ok = false;
          break;
        }
        sums_[low | bit] = s;
      }
      // larger v only makes every constraint tighter
      if (!ok) break;
      x_[i] = v;
      walk(i + 1, total + v);
    }
    x_[i] = 0;
  }

  const Polymatroid& p_;
  bool bases_only_;
  LatticePoint x_;
  std::vector<int> sums_;
  std::vector<int> tail_capacity_;
  std::vector<LatticePoint> out_;
};

}  // namespace

LatticePointSet base_points(const Polymatroid& p) {
  return sorted_set(p.size(), PointWalker(p, true).run());
}

LatticePointSet independence_points(const Polymatroid& p) {
  return sorted_set(p.size(), PointWalker(p, false).run());
}

int base_polytope_dimension(const Polymatroid& p) {
  if (p.size() == 0) return 0;
  return p.size() - static_cast<int>(rank_table::components(p.size(), p.rank_table()).size());
}

Lift multisymmetric_lift(const Polymatroid& p) {
  const int m = p.size();
  const int n = std::accumulate(p.cage().begin(), p.cage().end(), 0);
  if (n > kMaxGroundSet)
    throw Error(ErrorCode::SizeExceeded,
                "lift needs " + std::to_string(n) + " elements, over the cap", {n});
  std::vector<SubsetMask> blocks;
  int offset = 0;
  for (int a : p.cage()) {
    blocks.push_back(full_mask(a) << offset);
    offset += a;
  }
  // the rank only depends on how many elements of each block are present
  std::map<std::vector<int>, int> memo;
  std::vector<int> table(std::size_t{1} << n, 0);
  std::vector<int> counts(m);
  for (SubsetMask a = 0; a < table.size(); ++a) {
    for (int i = 0; i < m; ++i) counts[i] = popcount(a & blocks[i]);
    auto [it, inserted] = memo.try_emplace(counts, 0);
    if (inserted) {
      int best = popcount(a);
      for (SubsetMask I = 0; I <= p.ground_set(); ++I) {
        int value = p.rank(I);
        for (int i = 0; i < m; ++i)
          if (!contains(I, i)) value += counts[i];
        best = std::min(best, value);
      }
      it->second = best;
    }
    table[a] = it->second;
  }
  Matroid lifted = Matroid::from_rank_table(n, std::move(table));
  SubsetMask uni = 0;
  for (SubsetMask I = 0; I <= p.ground_set(); ++I) {
    uni = 0;
    for (int i = 0; i < m; ++i)
      if (contains(I, i)) uni |= blocks[i];
    if (lifted.rank(uni) != p.rank(I))
      throw Error(ErrorCode::InternalInconsistency,
                  "lift does not reproduce the polymatroid rank on " + describe_subset(I));
  }
  return {std::move(lifted), std::move(blocks)};
}

MConvexResult is_m_convex(const LatticePointSet& points) {
  using Reason = MConvexWitness::Reason;
  const auto& pts = points.points;
  if (pts.empty()) return {};
  const int sum0 = std::accumulate(pts.front().begin(), pts.front().end(), 0);
  for (const auto& p : pts) {
    for (int c : p)
      if (c < 0) return {false, MConvexWitness{Reason::negative_coordinate, p, p, -1}};
    if (std::accumulate(p.begin(), p.end(), 0) != sum0)
      return {false, MConvexWitness{Reason::unequal_sum, pts.front(), p, -1}};
  }
  const int m = points.dimension;
  LatticePoint probe;
  // alpha descends so that the reported witness starts from the larger point
  for (auto a = pts.rbegin(); a != pts.rend(); ++a)
    for (const auto& beta : pts)
      for (int i = 0; i < m; ++i) {
        const auto& alpha = *a;
        if (alpha[i] <= beta[i]) continue;
        bool found = false;
        for (int j = 0; j < m && !found; ++j) {
          if (alpha[j] >= beta[j]) continue;
          probe = alpha;
          --probe[i];
          ++probe[j];
          found = points.contains(probe);
        }
        if (!found) return {false, MConvexWitness{Reason::exchange, alpha, beta, i}};
      }
  return {};
}

std::vector<int> hull_rank_table(const LatticePointSet& points) {
  const int m = points.dimension;
  std::vector<int> table(std::size_t{1} << m, 0);
  for (SubsetMask I = 1; I < table.size(); ++I) {
    int best = 0;
    for (const auto& p : points.points) {
      int s = 0;
      for (int i = 0; i < m; ++i)
        if (contains(I, i)) s += p[i];
      best = std::max(best, s);
    }
    table[I] = best;
  }
  return table;
}

}  // namespace mklab
