#include <doctest.h>

#include "mklab/catalog.hpp"
#include "mklab/error.hpp"
#include "mklab/matroid.hpp"
#include "oracles.hpp"

using namespace mklab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalInconsistency;
}

SubsetMask set(std::initializer_list<int> xs) { return mask_of(std::span<const int>(xs.begin(), xs.size())); }

ExactPoly xy(std::initializer_list<std::tuple<int, int, int>> terms) {
  ExactPoly p({"x", "y"});
  for (auto [a, b, c] : terms) p.add_term({a, b}, c);
  return p;
}

}  // namespace

TEST_CASE("rank table construction") {
  CHECK(Matroid::from_rank_table(1, {0, 1}) == Matroid::uniform(1, 1));
  CHECK(Matroid::from_rank_table(2, {0, 1, 1, 1}) == Matroid::uniform(1, 2));
  CHECK(code_of([] { Matroid::from_rank_table(2, {0, 1, 1, 3}); }) == ErrorCode::AxiomViolation);
  CHECK(code_of([] { Matroid::from_rank_table(2, {0, 1, 1}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Matroid::from_rank_table(2, {1, 1, 1, 1}); }) == ErrorCode::AxiomViolation);
  // non-monotone
  CHECK(code_of([] { Matroid::from_rank_table(2, {0, 1, 1, 0}); }) == ErrorCode::AxiomViolation);
  // submodularity fails: {0},{1} both rank 0 but the pair rank 1
  CHECK(code_of([] { Matroid::from_rank_table(2, {0, 0, 0, 1}); }) == ErrorCode::AxiomViolation);
  CHECK(code_of([] { Matroid::uniform(1, 21); }) == ErrorCode::SizeExceeded);
}

TEST_CASE("bases construction") {
  const std::vector<SubsetMask> u23{set({0, 1}), set({0, 2}), set({1, 2})};
  CHECK(Matroid::from_bases(3, u23) == Matroid::uniform(2, 3));
  const std::vector<SubsetMask> one{set({0})};
  const Matroid loopy = Matroid::from_bases(2, one);
  CHECK(std::vector<int>(loopy.rank_table().begin(), loopy.rank_table().end()) == std::vector<int>{0, 1, 0, 1});
  CHECK(loopy.is_loop(1));
  const std::vector<SubsetMask> bad{set({0, 1}), set({2, 3})};
  CHECK(code_of([&] { Matroid::from_bases(4, bad); }) == ErrorCode::AxiomViolation);
  CHECK(code_of([] { Matroid::from_bases(2, {}); }) == ErrorCode::InvalidInput);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = oracle::random_matroid(7, true);
    const auto bs = bases(m);
    CHECK(Matroid::from_bases(m.size(), bs) == m);
    const auto t = oracle::rank_from_bases(m.size(), bs);
    CHECK(std::equal(t.begin(), t.end(), m.rank_table().begin()));
  }
}

TEST_CASE("uniform matroids") {
  const Matroid u = Matroid::uniform(2, 3);
  CHECK(std::vector<int>(u.rank_table().begin(), u.rank_table().end()) ==
        std::vector<int>{0, 1, 1, 2, 1, 2, 2, 2});
  const Matroid z = Matroid::uniform(0, 2);
  CHECK(std::all_of(z.rank_table().begin(), z.rank_table().end(), [](int x) { return x == 0; }));
  const Matroid b = Matroid::uniform(3, 3);
  for (SubsetMask s = 0; s < 8; ++s) CHECK(b.rank(s) == popcount(s));
  CHECK(code_of([] { Matroid::uniform(3, 2); }) == ErrorCode::InvalidRank);
}

TEST_CASE("closure and flats") {
  const Matroid u = Matroid::uniform(2, 3);
  CHECK(closure(u, set({0})) == set({0}));
  CHECK(closure(u, set({0, 1})) == 7);
  CHECK(flats(u) == std::vector<SubsetMask>{0, 1, 2, 4, 7});
  const std::vector<SubsetMask> one{set({0})};
  CHECK(closure(Matroid::from_bases(2, one), 0) == set({1}));
  CHECK(flats(Matroid::uniform(3, 3)).size() == 8);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::random_matroid(7, true);
    for (SubsetMask s = 0; s <= m.ground_set(); ++s) {
      const SubsetMask c = closure(m, s);
      CHECK(is_subset(s, c));
      CHECK(m.rank(c) == m.rank(s));
      CHECK(closure(m, c) == c);
    }
    for (SubsetMask f : flats(m)) CHECK(is_flat(m, f));
  }
}

TEST_CASE("minors, duals, sums, components") {
  CHECK(dual(Matroid::uniform(2, 4)) == Matroid::uniform(2, 4));
  CHECK(minor(Matroid::uniform(2, 3), 0, set({0})) == Matroid::uniform(1, 2));
  CHECK(code_of([] { minor(Matroid::uniform(2, 3), set({0}), set({0})); }) == ErrorCode::OverlapError);
  const Matroid two = direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 1));
  CHECK(connected_components(two) == std::vector<SubsetMask>{set({0}), set({1})});
  CHECK(is_connected(Matroid::uniform(2, 4)));
  CHECK_FALSE(is_connected(two));
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = oracle::random_matroid(7, true);
    CHECK(dual(dual(m)) == m);
    CHECK(dual(m).rank() == m.size() - m.rank());
    // components partition E and each restriction is connected
    SubsetMask seen = 0;
    for (SubsetMask c : connected_components(m)) {
      CHECK((seen & c) == 0);
      seen |= c;
      CHECK(is_connected(restriction(m, c)));
      CHECK(m.rank(c) + m.rank(m.ground_set() & ~c) == m.rank());
    }
    CHECK(seen == m.ground_set());
  }
}

TEST_CASE("tutte and beta") {
  CHECK(tutte(Matroid::uniform(2, 3)) == xy({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(tutte(Matroid::uniform(2, 4)) == xy({{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}}));
  CHECK(beta(Matroid::uniform(2, 3)) == 1);
  CHECK(beta(Matroid::uniform(2, 4)) == 2);
  CHECK(beta(direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 1))) == 0);
  CHECK(beta(Matroid::uniform(0, 1)) == 0);
  CHECK(beta(Matroid::uniform(1, 1)) == 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Matroid m = oracle::random_matroid(7, true);
    const ExactPoly t = tutte(m);
    CHECK(t == oracle::tutte_rank_generating(m));
    const std::vector<long> one{1, 1};
    CHECK(t.evaluate(std::span<const long>(one)) == Rational(static_cast<long>(bases(m).size())));
    CHECK(beta(m) == oracle::beta_crapo(m));
    for (int i = 0; i < m.size(); ++i) {
      if (m.is_loop(i) || m.is_coloop(i)) continue;
      const SubsetMask e = SubsetMask{1} << i;
      CHECK(beta(m) == beta(minor(m, e, 0)) + beta(minor(m, 0, e)));
    }
  }
}

TEST_CASE("named matroids") {
  CHECK(fano().rank() == 3);
  CHECK(bases(fano()).size() == 28);
  CHECK(flats(fano()).size() == 1 + 7 + 7 + 1);
  CHECK(bases(vamos()).size() == 70 - 5);
  CHECK(tutte(k4_graphic()) == oracle::tutte_rank_generating(k4_graphic()));
  // K4 has 16 spanning trees
  CHECK(bases(k4_graphic()).size() == 16);
}

TEST_CASE("principal extension") {
  CHECK(principal_extension(Matroid::uniform(1, 1), set({0})) == Matroid::uniform(1, 2));
  CHECK(principal_extension(Matroid::uniform(2, 3), 7) == Matroid::uniform(2, 4));
  const Matroid par = principal_extension(Matroid::uniform(2, 3), set({0}));
  CHECK(par.rank(set({0, 3})) == 1);
  CHECK(par.rank(set({1, 3})) == 2);
  CHECK(code_of([] { principal_extension(Matroid::uniform(2, 3), set({0, 1})); }) == ErrorCode::NotAFlat);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::random_matroid(6);
    const auto fl = flats(m);
    const SubsetMask g = fl[oracle::uniform_int(1, static_cast<int>(fl.size()) - 1)];
    const Matroid ext = principal_extension(m, g);
    const SubsetMask star = SubsetMask{1} << m.size();
    for (SubsetMask a = 0; a <= ext.ground_set(); ++a) {
      const SubsetMask rest = a & ~star;
      const int want = (a & star) ? std::min(m.rank(rest) + 1, m.rank(rest | g)) : m.rank(rest);
      CHECK(ext.rank(a) == want);
    }
  }
}
