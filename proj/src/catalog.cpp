#include "mklab/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mklab/error.hpp"

namespace mklab {

namespace {

std::string uname(int r, int n) { return "U(" + std::to_string(r) + "," + std::to_string(n) + ")"; }

// Sparse paving matroid: every r-set is a basis except the listed ones.
Matroid sparse_paving(int n, int r, const std::vector<std::vector<int>>& dependent) {
  std::set<SubsetMask> bad;
  for (const auto& d : dependent) bad.insert(mask_of(d));
  std::vector<SubsetMask> bs;
  for (SubsetMask s = 0; s <= full_mask(n); ++s)
    if (popcount(s) == r && !bad.count(s)) bs.push_back(s);
  return Matroid::from_bases(n, bs);
}

SubsetMask set(std::initializer_list<int> xs) {
  return mask_of(std::span<const int>(xs.begin(), xs.size()));
}

std::vector<NamedMatroid> uniforms() {
  std::vector<NamedMatroid> out;
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) out.push_back({uname(r, n), Matroid::uniform(r, n)});
  return out;
}

std::vector<NamedMatroid> named() {
  return {{"fano", fano()}, {"non-fano", non_fano()}, {"k4", k4_graphic()}, {"vamos", vamos()}};
}

std::vector<NamedMatroid> sums() {
  auto u = Matroid::uniform;
  return {
      {"U(1,2)+U(1,2)", direct_sum(u(1, 2), u(1, 2))},
      {"U(2,3)+U(1,2)", direct_sum(u(2, 3), u(1, 2))},
      {"U(2,3)+U(2,3)", direct_sum(u(2, 3), u(2, 3))},
      {"U(1,3)+U(2,4)", direct_sum(u(1, 3), u(2, 4))},
      {"U(1,1)+U(2,3)", direct_sum(u(1, 1), u(2, 3))},
      {"U(2,4)+U(1,2)", direct_sum(u(2, 4), u(1, 2))},
      {"U(0,1)+U(2,3)", direct_sum(u(0, 1), u(2, 3))},
  };
}

// Each step adds a free element on cl(S) for the listed S.
std::vector<NamedMatroid> chain(const std::string& base_name, Matroid m,
                                const std::vector<SubsetMask>& steps) {
  std::vector<NamedMatroid> out;
  std::string name = base_name;
  for (SubsetMask s : steps) {
    const SubsetMask g = closure(m, s);
    m = principal_extension(m, g);
    name = "ext(" + name + ";" + describe_subset(g) + ")";
    out.push_back({name, m});
  }
  return out;
}

std::vector<NamedMatroid> extensions() {
  std::vector<NamedMatroid> out;
  auto append = [&out](std::vector<NamedMatroid> more) {
    for (auto& x : more) out.push_back(std::move(x));
  };
  append(chain(uname(2, 3), Matroid::uniform(2, 3), {set({0}), set({1, 2}), set({0, 3})}));
  append(chain(uname(3, 4), Matroid::uniform(3, 4), {set({0, 1}), set({2, 3}), set({0, 1, 2})}));
  append(chain(uname(2, 2), Matroid::uniform(2, 2), {set({0, 1}), set({0, 1}), set({0})}));
  append(chain("k4", k4_graphic(), {set({0, 1})}));
  return out;
}

std::vector<NamedMatroid> duals() {
  std::vector<NamedMatroid> out;
  for (auto& x : named()) out.push_back({"dual(" + x.name + ")", dual(x.matroid)});
  for (auto& x : extensions())
    if (x.matroid.size() <= 6) out.push_back({"dual(" + x.name + ")", dual(x.matroid)});
  for (auto& x : sums()) out.push_back({"dual(" + x.name + ")", dual(x.matroid)});
  return out;
}

std::vector<NamedMatroid> everything() {
  std::vector<NamedMatroid> out;
  std::set<std::string> seen;
  for (auto* f : {&uniforms, &duals, &sums, &extensions, &named})
    for (auto& x : (*f)())
      if (seen.insert(x.name).second) out.push_back(std::move(x));
  return out;
}

}  // namespace

Matroid fano() {
  return sparse_paving(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Matroid non_fano() {
  return sparse_paving(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}});
}

// Edges 01 02 03 12 13 23 of K4, in that order; dependent triples are triangles.
Matroid k4_graphic() { return sparse_paving(6, 3, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}); }

Matroid vamos() {
  return sparse_paving(8, 4, {{0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {2, 3, 4, 5}, {2, 3, 6, 7}});
}

std::vector<std::string> catalog_families() {
  return {"uniform", "dual", "sum", "extension", "named", "small", "all"};
}

std::vector<NamedMatroid> catalog_matroids(std::string_view family) {
  if (family == "uniform") return uniforms();
  if (family == "dual") return duals();
  if (family == "sum") return sums();
  if (family == "extension") return extensions();
  if (family == "named") return named();
  if (family == "all") return everything();
  if (family == "small") {
    auto all = everything();
    std::erase_if(all, [](const NamedMatroid& x) { return x.matroid.size() > 5; });
    return all;
  }
  throw Error(ErrorCode::InvalidInput, "unknown catalog family '" + std::string(family) + "'");
}

namespace {

struct PairSeed {
  std::string name;
  Matroid matroid;
  std::vector<SubsetMask> subsets;
};

std::vector<PairSeed> polymatroid_seeds() {
  auto u = Matroid::uniform;
  return {
      {"U(2,3)", u(2, 3), {set({0}), set({1, 2})}},
      {"U(2,3)", u(2, 3), {set({0, 1}), set({1, 2})}},
      {"U(2,3)", u(2, 3), {set({0, 1, 2}), set({0})}},
      {"U(2,4)", u(2, 4), {set({0, 1}), set({2, 3})}},
      {"U(2,4)", u(2, 4), {set({0}), set({1}), set({2, 3})}},
      {"U(2,4)", u(2, 4), {set({0}), set({1, 2, 3})}},
      {"U(3,4)", u(3, 4), {set({0, 1, 2, 3}), set({0})}},
      {"U(3,4)", u(3, 4), {set({0, 1, 2}), set({2, 3})}},
      {"U(3,5)", u(3, 5), {set({0, 1, 2}), set({3, 4})}},
      {"U(2,5)", u(2, 5), {set({0}), set({1, 2}), set({3, 4})}},
      {"U(1,3)", u(1, 3), {set({0}), set({1}), set({2})}},
      {"U(3,3)", u(3, 3), {set({0, 1, 2}), set({0})}},
      {"fano", fano(), {set({0, 1, 2}), set({3, 4, 5, 6})}},
      {"fano", fano(), {set({0, 3}), set({1, 4}), set({2, 5, 6})}},
      {"k4", k4_graphic(), {set({0, 1, 3}), set({2, 4, 5})}},
      {"U(2,3)+U(1,2)", direct_sum(u(2, 3), u(1, 2)), {set({0, 3}), set({1, 2, 4})}},
      {"U(1,1)+U(2,3)", direct_sum(u(1, 1), u(2, 3)), {set({0, 1}), set({2, 3})}},
      // no spanning subset
      {"U(2,3)", u(2, 3), {set({0}), set({1}), set({2})}},
      {"U(3,4)", u(3, 4), {set({0, 1}), set({2, 3})}},
      {"U(3,3)", u(3, 3), {set({0}), set({1}), set({2})}},
  };
}

std::string describe_family(const std::vector<SubsetMask>& subsets) {
  std::string s = "(";
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (i) s += ",";
    s += describe_subset(subsets[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<NamedPolymatroid> catalog_polymatroids() {
  std::vector<NamedPolymatroid> out;
  out.push_back({"star", Polymatroid::from_rank_table(2, {1, 2}, {0, 1, 2, 2})});
  out.push_back({"simplex2", Polymatroid::from_rank_table(2, {1, 1}, {0, 1, 1, 1})});
  out.push_back({"square22", Polymatroid::from_rank_table(2, {2, 2}, {0, 2, 2, 2})});
  out.push_back({"box12", Polymatroid::from_rank_table(2, {1, 2}, {0, 1, 2, 3})});
  for (int a = 1; a <= 3; ++a)
    out.push_back({"single" + std::to_string(a), Polymatroid::from_rank_table(1, {a}, {0, a})});
  for (const auto& seed : polymatroid_seeds())
    out.push_back({"restrict(" + seed.name + ";" + describe_family(seed.subsets) + ")",
                   restriction_polymatroid(seed.matroid, seed.subsets)});
  return out;
}

std::vector<NamedPair> catalog_pairs() {
  std::vector<NamedPair> out;
  std::set<std::string> seen;
  auto add = [&](std::string name, const Matroid& m, std::vector<SubsetMask> subsets) {
    name += ";" + describe_family(subsets);
    if (seen.insert(name).second) out.push_back({std::move(name), m, std::move(subsets)});
  };
  for (const auto& seed : polymatroid_seeds()) add(seed.name, seed.matroid, seed.subsets);

  std::vector<NamedMatroid> bases;
  for (auto& x : uniforms())
    if (x.matroid.size() <= 7 && x.matroid.size() >= 2) bases.push_back(std::move(x));
  for (auto* f : {&duals, &sums, &extensions})
    for (auto& x : (*f)())
      if (x.matroid.size() <= 7) bases.push_back(std::move(x));
  for (const auto& x : bases) {
    const int n = x.matroid.size();
    const int h = n / 2;
    add(x.name, x.matroid, {full_mask(h), full_mask(n) & ~full_mask(h)});
    if (n >= 3 && n <= 6) add(x.name, x.matroid, {set({0}), set({1}), full_mask(n) & ~full_mask(2)});
  }

  for (const auto& p : catalog_polymatroids()) {
    const auto cage = p.polymatroid.cage();
    if (std::accumulate(cage.begin(), cage.end(), 0) > 8) continue;
    Lift lift = multisymmetric_lift(p.polymatroid);
    add("lift(" + p.name + ")", lift.matroid, lift.blocks);
  }
  return out;
}

}  // namespace mklab
