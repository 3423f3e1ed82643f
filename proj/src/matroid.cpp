#include "mklab/matroid.hpp"

#include <algorithm>
#include <map>

#include "mklab/error.hpp"
#include "mklab/rank_table.hpp"

namespace mklab {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxGroundSet)
    throw Error(ErrorCode::SizeExceeded,
                "ground set of size " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxGroundSet),
                {n});
}

bool by_size_then_mask(SubsetMask a, SubsetMask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

Matroid Matroid::trusted(int n, std::vector<int> table) { return Matroid(n, std::move(table)); }

Matroid Matroid::from_rank_table(int n, std::vector<int> table) {
  check_size(n);
  if (table.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::InvalidInput, "rank table must have 2^n entries");
  rank_table::check_axioms(n, table, true);
  return Matroid(n, std::move(table));
}

Matroid Matroid::from_bases(int n, std::span<const SubsetMask> bases) {
  check_size(n);
  if (bases.empty()) throw Error(ErrorCode::InvalidInput, "a matroid needs at least one basis");
  const SubsetMask ground = full_mask(n);
  for (SubsetMask b : bases) {
    if (!is_subset(b, ground))
      throw Error(ErrorCode::InvalidInput, "basis " + describe_subset(b) + " leaves the ground set");
    if (popcount(b) != popcount(bases.front()))
      throw Error(ErrorCode::AxiomViolation, "bases have different cardinalities",
                  {bases.front(), b});
  }
  const SubsetMask size = SubsetMask{1} << n;
  std::vector<char> independent(size, 0);
  for (SubsetMask b : bases) independent[b] = 1;
  for (SubsetMask s = size; s-- > 0;) {
    if (independent[s]) continue;
    for (int i = 0; i < n && !independent[s]; ++i)
      if (!contains(s, i) && independent[s | (SubsetMask{1} << i)]) independent[s] = 1;
  }
  std::vector<int> table(size, 0);
  for (SubsetMask s = 1; s < size; ++s) {
    if (independent[s]) {
      table[s] = popcount(s);
      continue;
    }
    int best = 0;
    for (int i = 0; i < n; ++i)
      if (contains(s, i)) best = std::max(best, table[s & ~(SubsetMask{1} << i)]);
    table[s] = best;
  }
  // If the table passes, its bases are exactly the listed sets (the size-r
  // independent sets are the listed ones), so exchange holds too.
  rank_table::check_axioms(n, table, true);
  return Matroid(n, std::move(table));
}

Matroid Matroid::uniform(int r, int n) {
  check_size(n);
  if (r < 0 || r > n)
    throw Error(ErrorCode::InvalidRank, "uniform matroid needs 0 <= r <= n", {r, n});
  std::vector<int> table(std::size_t{1} << n);
  for (SubsetMask s = 0; s < table.size(); ++s) table[s] = std::min(popcount(s), r);
  return Matroid(n, std::move(table));
}

bool Matroid::is_coloop(int i) const {
  return rank() - rank_[ground_set() & ~(SubsetMask{1} << i)] == 1;
}

bool Matroid::has_loops() const {
  for (int i = 0; i < n_; ++i)
    if (is_loop(i)) return true;
  return false;
}

bool Matroid::has_coloops() const {
  for (int i = 0; i < n_; ++i)
    if (is_coloop(i)) return true;
  return false;
}

SubsetMask closure(const Matroid& m, SubsetMask s) {
  SubsetMask out = s;
  const int r = m.rank(s);
  for (int i = 0; i < m.size(); ++i)
    if (!contains(s, i) && m.rank(s | (SubsetMask{1} << i)) == r) out |= SubsetMask{1} << i;
  return out;
}

bool is_flat(const Matroid& m, SubsetMask s) { return closure(m, s) == s; }

std::vector<SubsetMask> flats(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s <= m.ground_set(); ++s)
    if (is_flat(m, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), by_size_then_mask);
  return out;
}

Matroid minor(const Matroid& m, SubsetMask deleted, SubsetMask contracted) {
  if ((deleted & contracted) != 0)
    throw Error(ErrorCode::OverlapError, "deleted and contracted sets overlap",
                {deleted, contracted});
  const SubsetMask ground = m.ground_set();
  if (!is_subset(deleted | contracted, ground))
    throw Error(ErrorCode::InvalidInput, "minor sets leave the ground set");
  const std::vector<int> keep = elements_of(ground & ~(deleted | contracted));
  const int k = static_cast<int>(keep.size());
  const int base = m.rank(contracted);
  std::vector<SubsetMask> original(std::size_t{1} << k, 0);
  std::vector<int> table(std::size_t{1} << k, 0);
  for (SubsetMask a = 1; a < original.size(); ++a) {
    const int low = std::countr_zero(a);
    original[a] = original[a & (a - 1)] | (SubsetMask{1} << keep[low]);
    table[a] = m.rank(original[a] | contracted) - base;
  }
  return Matroid::trusted(k, std::move(table));
}

Matroid restriction(const Matroid& m, SubsetMask keep) {
  return minor(m, m.ground_set() & ~keep, 0);
}

Matroid dual(const Matroid& m) {
  const SubsetMask ground = m.ground_set();
  std::vector<int> table(std::size_t{1} << m.size());
  for (SubsetMask a = 0; a < table.size(); ++a)
    table[a] = popcount(a) + m.rank(ground & ~a) - m.rank();
  return Matroid::trusted(m.size(), std::move(table));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  check_size(n);
  std::vector<int> table(std::size_t{1} << n);
  const SubsetMask low = a.ground_set();
  for (SubsetMask s = 0; s < table.size(); ++s)
    table[s] = a.rank(s & low) + b.rank(s >> a.size());
  return Matroid::trusted(n, std::move(table));
}

std::vector<SubsetMask> connected_components(const Matroid& m) {
  return rank_table::components(m.size(), m.rank_table());
}

bool is_connected(const Matroid& m) { return connected_components(m).size() <= 1; }

std::vector<SubsetMask> bases(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s <= m.ground_set(); ++s)
    if (popcount(s) == m.rank() && m.rank(s) == m.rank()) out.push_back(s);
  return out;
}

std::vector<SubsetMask> circuits(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 1; s <= m.ground_set(); ++s) {
    const int size = popcount(s);
    if (m.rank(s) != size - 1) continue;
    bool minimal = true;
    for (int i = 0; i < m.size() && minimal; ++i)
      if (contains(s, i) && m.rank(s & ~(SubsetMask{1} << i)) != size - 1) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), by_size_then_mask);
  return out;
}

namespace {

// Dense coefficient grid: coeff[i][j] multiplies x^i y^j.
using Grid = std::vector<std::vector<Integer>>;

void add_shifted(Grid& into, const Grid& from, int dx, int dy) {
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t j = 0; j < from[i].size(); ++j) {
      if (from[i][j] == 0) continue;
      const std::size_t ti = i + dx, tj = j + dy;
      if (into.size() <= ti) into.resize(ti + 1);
      if (into[ti].size() <= tj) into[ti].resize(tj + 1, 0);
      into[ti][tj] += from[i][j];
    }
}

class TutteSolver {
 public:
  const Grid& solve(const std::vector<int>& table) {
    auto it = memo_.find(table);
    if (it != memo_.end()) return it->second;
    Grid result;
    const std::size_t half = table.size() / 2;
    if (half == 0) {
      result = {{1}};
    } else {
      // split on the last element e
      const std::vector<int> del(table.begin(), table.begin() + half);
      const int rank_e = table[half];
      std::vector<int> con(half);
      for (std::size_t a = 0; a < half; ++a) con[a] = table[half + a] - rank_e;
      const bool loop = rank_e == 0;
      const bool coloop = table.back() - table[half - 1] == 1;
      if (loop) {
        add_shifted(result, solve(del), 0, 1);
      } else if (coloop) {
        add_shifted(result, solve(con), 1, 0);
      } else {
        add_shifted(result, solve(del), 0, 0);
        add_shifted(result, solve(con), 0, 0);
      }
    }
    return memo_.emplace(table, std::move(result)).first->second;
  }

 private:
  std::map<std::vector<int>, Grid> memo_;
};

}  // namespace

ExactPoly tutte(const Matroid& m) {
  TutteSolver solver;
  const std::vector<int> table(m.rank_table().begin(), m.rank_table().end());
  const Grid& grid = solver.solve(table);
  ExactPoly out({"x", "y"});
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j)
      out.add_term({static_cast<int>(i), static_cast<int>(j)}, Rational(grid[i][j]));
  return out;
}

Integer beta(const Matroid& m) { return to_integer(tutte(m).coefficient({1, 0})); }

Matroid principal_extension(const Matroid& m, SubsetMask g) {
  check_size(m.size() + 1);
  if (g == 0) throw Error(ErrorCode::InvalidInput, "principal extension needs a nonempty flat");
  if (!is_subset(g, m.ground_set()))
    throw Error(ErrorCode::InvalidInput, "flat leaves the ground set");
  const SubsetMask cl = closure(m, g);
  if (cl != g)
    throw Error(ErrorCode::NotAFlat, describe_subset(g) + " is not a flat", {g, cl});
  const int n = m.size();
  std::vector<int> table(std::size_t{1} << (n + 1));
  const SubsetMask star = SubsetMask{1} << n;
  for (SubsetMask a = 0; a < table.size(); ++a) {
    const SubsetMask rest = a & ~star;
    table[a] = (a & star) == 0 ? m.rank(rest)
                               : std::min(m.rank(rest) + 1, m.rank(rest | g));
  }
  return Matroid::from_rank_table(n + 1, std::move(table));
}

}  // namespace mklab
