#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mklab {

// Subset of {0, ..., n-1}; bit i set means element i is present.
using SubsetMask = std::uint32_t;

// Full rank tables have 2^n entries; 20 keeps one table under 16 MiB.
inline constexpr int kMaxGroundSet = 20;

inline constexpr SubsetMask full_mask(int n) {
  return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

inline int popcount(SubsetMask s) { return std::popcount(s); }

inline bool contains(SubsetMask s, int i) { return (s >> i) & 1U; }

inline bool is_subset(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

std::vector<int> elements_of(SubsetMask s);
SubsetMask mask_of(std::span<const int> elements);

// "{0,2,3}"
std::string describe_subset(SubsetMask s);

}  // namespace mklab
