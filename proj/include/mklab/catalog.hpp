#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mklab/matroid.hpp"
#include "mklab/polymatroid.hpp"

namespace mklab {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

struct NamedPolymatroid {
  std::string name;
  Polymatroid polymatroid;
};

struct NamedPair {
  std::string name;
  Matroid matroid;
  std::vector<SubsetMask> subsets;
};

// uniform, dual, sum, extension, named, small, all
std::vector<std::string> catalog_families();
// Unknown family names raise InvalidInput.
std::vector<NamedMatroid> catalog_matroids(std::string_view family);

Matroid fano();
Matroid non_fano();
Matroid k4_graphic();
Matroid vamos();

std::vector<NamedPolymatroid> catalog_polymatroids();

// (matroid, subsets) with at most four subsets, plus the multisymmetric lifts
// of the catalog polymatroids with cage sum at most 8.
std::vector<NamedPair> catalog_pairs();

}  // namespace mklab
