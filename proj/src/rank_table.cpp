#include "mklab/rank_table.hpp"

#include <sstream>

#include "mklab/error.hpp"

namespace mklab {

std::vector<int> elements_of(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

SubsetMask mask_of(std::span<const int> elements) {
  SubsetMask s = 0;
  for (int e : elements) s |= SubsetMask{1} << e;
  return s;
}

std::string describe_subset(SubsetMask s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace rank_table {

namespace {

[[noreturn]] void violation(const std::string& what, SubsetMask a, SubsetMask b) {
  throw Error(ErrorCode::AxiomViolation,
              what + " fails at " + describe_subset(a) + ", " + describe_subset(b),
              {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
}

}  // namespace

void check_axioms(int n, std::span<const int> table, bool unit_increase) {
  const SubsetMask size = SubsetMask{1} << n;
  if (table.size() != size)
    throw Error(ErrorCode::InvalidInput, "rank table length must be 2^n");
  if (table[0] != 0) violation("normalization", 0, 0);
  for (SubsetMask a = 0; a < size; ++a) {
    if (table[a] < 0) violation("nonnegativity", a, a);
    for (int i = 0; i < n; ++i) {
      if (contains(a, i)) continue;
      const SubsetMask ai = a | (SubsetMask{1} << i);
      const int step = table[ai] - table[a];
      if (step < 0) violation("monotonicity", a, ai);
      if (unit_increase && step > 1) violation("unit increase", a, ai);
    }
  }
  for (SubsetMask a = 0; a < size; ++a) {
    for (int i = 0; i < n; ++i) {
      if (contains(a, i)) continue;
      const SubsetMask ai = a | (SubsetMask{1} << i);
      for (int j = i + 1; j < n; ++j) {
        if (contains(a, j)) continue;
        const SubsetMask aj = a | (SubsetMask{1} << j);
        if (table[ai] + table[aj] < table[ai | aj] + table[a]) violation("submodularity", ai, aj);
      }
    }
  }
}

std::vector<SubsetMask> components(int n, std::span<const int> table) {
  const SubsetMask ground = full_mask(n);
  const int total = table[ground];
  std::vector<SubsetMask> separators;
  for (SubsetMask a = 1; a < ground; ++a)
    if (table[a] + table[ground & ~a] == total) separators.push_back(a);
  std::vector<SubsetMask> out;
  SubsetMask covered = 0;
  for (int i = 0; i < n; ++i) {
    if (contains(covered, i)) continue;
    SubsetMask block = ground;
    for (SubsetMask s : separators)
      if (contains(s, i)) block &= s;
    out.push_back(block);
    covered |= block;
  }
  return out;
}

}  // namespace rank_table
}  // namespace mklab
