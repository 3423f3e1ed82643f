#pragma once

#include <span>
#include <vector>

#include "mklab/subset.hpp"

// Helpers shared by matroids and polymatroids: both are a rank table over
// the 2^n subsets of a small ground set.
namespace mklab::rank_table {

// Throws Error(AxiomViolation) with a two-mask witness. Submodularity is
// checked in its local form rk(A+i) + rk(A+j) >= rk(A+i+j) + rk(A), which is
// equivalent to the global inequality over all pairs.
void check_axioms(int n, std::span<const int> table, bool unit_increase);

// Finest partition of the ground set into separators, i.e. sets A with
// rk(A) + rk(E - A) = rk(E). Sorted by smallest element.
std::vector<SubsetMask> components(int n, std::span<const int> table);

}  // namespace mklab::rank_table
