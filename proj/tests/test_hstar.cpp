#include <doctest.h>

#include "mklab/catalog.hpp"
#include "mklab/error.hpp"
#include "mklab/hstar.hpp"
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

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

ExactPoly univariate(std::initializer_list<Rational> coeffs) {
  ExactPoly f({"t"});
  int d = 0;
  for (const auto& c : coeffs) f.add_term({d++}, c);
  return f;
}

BundleSpec dual_bundle(const Matroid& m) { return bundle_from_polymatroid(m, dual_polymatroid(m)); }

// Loopless and coloopless random matroid, or nothing after a few tries.
std::optional<Matroid> random_clean_matroid(int nmax) {
  for (int tries = 0; tries < 50; ++tries) {
    const Matroid m = oracle::random_matroid(nmax);
    if (!m.has_coloops()) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("h* examples") {
  for (int r = 1; r <= 5; ++r) {
    const Matroid m = Matroid::uniform(r, r + 2);
    const BundleSpec le{{m.ground_set()}, {1}, false};
    std::vector<Integer> want(r, 0);
    want[0] = 1;
    const HStarReport rep = hstar_vector(m, le);
    CHECK(rep.hstar == want);
    CHECK(rep.degree == r - 1);
    CHECK(rep.top_identity_checked);
    CHECK(rep.macaulay.macaulay);
  }
  const HStarReport u24 = hstar_vector(Matroid::uniform(2, 4), dual_bundle(Matroid::uniform(2, 4)));
  CHECK(u24.snapper == univariate({1, 2}));
  CHECK(u24.hstar == ints({1, 1}));
  const HStarReport u23 = hstar_vector(Matroid::uniform(2, 3), dual_bundle(Matroid::uniform(2, 3)));
  CHECK(u23.snapper == univariate({1, 1}));
  CHECK(u23.hstar == ints({1, 0}));

  const std::vector<SubsetMask> one{set({0})};
  const BundleSpec le{{3}, {1}, false};
  CHECK(code_of([&] { hstar_vector(Matroid::from_bases(2, one), le); }) == ErrorCode::LoopyMatroid);

  const HStarReport zero = hstar_from_snapper(ExactPoly({"t"}));
  CHECK(zero.degree == -1);
  CHECK(zero.hstar.empty());
}

TEST_CASE("h* extraction matches the series definition") {
  // random integer-valued polynomials: sums of binom(t + i, i) with small coefficients
  for (int trial = 0; trial < 40; ++trial) {
    const int d = oracle::uniform_int(0, 5);
    ExactPoly chi({"t"}, Basis::shifted);
    std::vector<long> h(d + 1);
    for (int i = 0; i <= d; ++i) h[i] = oracle::uniform_int(-3, 3);
    h[0] = 1;
    // the degree is exactly d iff the entries do not cancel
    if (std::accumulate(h.begin(), h.end(), 0L) == 0) h[d] += 1;
    // chi(t) = sum_k h_k binom(t + d - k, d)
    ExactPoly acc({"t"});
    for (int k = 0; k <= d; ++k) {
      ExactPoly term({"t"}, Basis::shifted);
      term.add_term({d}, 1);
      ExactPoly p = convert_basis(term, Basis::power);
      // shift t -> t - k
      ExactPoly shifted({"t"});
      for (const auto& [e, c] : p.terms()) {
        ExactPoly pw = ExactPoly::constant({"t"}, c);
        for (int j = 0; j < e[0]; ++j)
          pw = pw * (ExactPoly::variable({"t"}, 0) - ExactPoly::constant({"t"}, k));
        shifted += pw;
      }
      acc += shifted * Rational(h[k]);
    }
    const HStarReport rep = hstar_from_snapper(acc);
    CHECK(rep.degree == d);
    CHECK(rep.hstar == std::vector<Integer>(h.begin(), h.end()));
  }
}

TEST_CASE("macaulay bounds") {
  CHECK(macaulay_upper(3, 1) == 6);
  CHECK(macaulay_upper(4, 2) == 5);
  const MacaulayRep rep = macaulay_rep(4, 2);
  CHECK(rep.binomials == std::vector<std::pair<Integer, int>>{{3, 2}, {1, 1}});
  CHECK(is_macaulay(ints({1, 3, 5})).macaulay);
  const auto bad = is_macaulay(ints({1, 3, 7}));
  CHECK_FALSE(bad.macaulay);
  CHECK(bad.violation_index == 2u);
  CHECK(is_macaulay(ints({2})).violation_index == 0u);
  CHECK(is_macaulay(ints({1, -1})).violation_index == 1u);
  CHECK(is_macaulay(ints({1, 0, 1})).violation_index == 2u);
  CHECK(is_macaulay(ints({1, 100})).macaulay);
  CHECK(code_of([] { macaulay_rep(0, 2); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { macaulay_upper(3, 0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { is_macaulay(std::vector<Integer>{}); }) == ErrorCode::InvalidInput);

  for (long n = 1; n <= 300; ++n)
    for (int d = 1; d <= 5; ++d) {
      const MacaulayRep r = macaulay_rep(n, d);
      Integer sum = 0;
      Integer prev = -1;
      int expect_i = d;
      for (const auto& [k, i] : r.binomials) {
        CHECK(i == expect_i--);
        CHECK(k >= i);
        if (prev >= 0) CHECK(k < prev);
        prev = k;
        sum += binomial(k.get_si(), i);
      }
      CHECK(sum == n);
    }
}

TEST_CASE("macaulay agrees with multicomplex search") {
  for (int v1 = 0; v1 <= 4; ++v1)
    for (int v2 = 0; v2 <= 6; ++v2)
      for (int v3 = 0; v3 <= 6; ++v3) {
        const std::vector<int> v{1, v1, v2, v3};
        const std::vector<Integer> vi(v.begin(), v.end());
        CHECK_MESSAGE(is_macaulay(vi).macaulay == oracle::multicomplex_exists(v), v1, " ", v2, " ", v3);
      }
}

TEST_CASE("minkowski decomposition of the dual bundle") {
  using Coeffs = std::map<SubsetMask, Integer>;
  CHECK(minkowski_coeffs_dual(Matroid::uniform(2, 3)) == Coeffs{{7, 1}});
  CHECK(minkowski_coeffs_dual(Matroid::uniform(2, 4)) == Coeffs{{15, 2}});
  CHECK(minkowski_coeffs_dual(Matroid::uniform(1, 2)) == Coeffs{{3, 1}});
  const std::vector<SubsetMask> one{set({0})};
  CHECK(code_of([&] { minkowski_coeffs_dual(Matroid::from_bases(2, one)); }) == ErrorCode::LoopyMatroid);

  CHECK(flat_coefficients(Matroid::uniform(2, 3), dual_polymatroid(Matroid::uniform(2, 3))) == Coeffs{{7, 1}});
  const Polymatroid simplex = Polymatroid::from_rank_table(2, {1, 1}, {0, 1, 1, 1});
  CHECK(flat_coefficients(Matroid::uniform(2, 2), simplex) == Coeffs{{3, 1}});
  CHECK(flat_coefficients(Matroid::uniform(2, 4), Polymatroid::from_matroid(Matroid::uniform(2, 4))) ==
        Coeffs{{15, 2}});
  const BundleSpec b = bundle_from_polymatroid(Matroid::uniform(2, 3), dual_polymatroid(Matroid::uniform(2, 3)));
  CHECK(b.subsets == std::vector<SubsetMask>{7});
  CHECK(b.exponents == std::vector<long>{1});
  CHECK_FALSE(b.augmented);

  for (int trial = 0; trial < 25; ++trial) {
    const Matroid m = oracle::random_matroid(6);
    CHECK(minkowski_coeffs_dual(m) == flat_coefficients(m, dual_polymatroid(m)));
  }
}

TEST_CASE("principal extension shifts coefficients onto the new element") {
  for (int trial = 0; trial < 12; ++trial) {
    const Matroid m = oracle::random_matroid(5);
    const auto fl = flats(m);
    const SubsetMask g = fl[oracle::uniform_int(1, static_cast<int>(fl.size()) - 1)];
    const Matroid ext = principal_extension(m, g);
    const SubsetMask star = SubsetMask{1} << m.size();
    const auto before = flat_coefficients(m, dual_polymatroid(m));
    BundleSpec lifted{{}, {}, false};
    for (const auto& [f, c] : before) {
      lifted.subsets.push_back(is_subset(g, f) ? (f | star) : f);
      lifted.exponents.push_back(c.get_si());
    }
    lifted.subsets.push_back(g | star);
    lifted.exponents.push_back(1);
    CHECK(snapper_bundle(ext, dual_bundle(ext)) == snapper_bundle(ext, lifted));
  }
}

TEST_CASE("omega") {
  CHECK(omega(Matroid::uniform(2, 3)) == 0);
  CHECK(omega(Matroid::uniform(2, 4)) == 1);
  CHECK(omega(direct_sum(Matroid::uniform(2, 3), Matroid::uniform(2, 3))) == 0);
  CHECK(omega(direct_sum(Matroid::uniform(2, 4), Matroid::uniform(2, 4))) == 1);
  CHECK(code_of([] { omega(Matroid::uniform(2, 2)); }) == ErrorCode::HasLoopOrColoop);
  CHECK(code_of([] { omega_direct(Matroid::uniform(0, 2)); }) == ErrorCode::HasLoopOrColoop);
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = random_clean_matroid(6);
    if (!m) continue;
    CHECK(omega(*m) == omega_direct(*m));
    const auto hyp = simplicially_positive_hypothesis(*m);
    if (hyp.holds) CHECK(omega(*m) >= 0);
  }
}

TEST_CASE("simplicial positivity hypothesis") {
  const auto u23 = simplicially_positive_hypothesis(Matroid::uniform(2, 3));
  CHECK(u23.holds);
  REQUIRE(u23.flats.size() == 1);
  CHECK(u23.flats[0].flat == 7);
  CHECK(u23.flats[0].coefficient == 1);
  const auto u24 = simplicially_positive_hypothesis(Matroid::uniform(2, 4));
  REQUIRE(u24.flats.size() == 1);
  CHECK(u24.flats[0].coefficient == 2);
  CHECK(code_of([] { simplicially_positive_hypothesis(Matroid::uniform(1, 1)); }) == ErrorCode::HasLoopOrColoop);
}

TEST_CASE("broken circuit h-vectors") {
  const std::vector<int> o3{0, 1, 2};
  CHECK(bc_hvector(Matroid::uniform(2, 3), o3) == ints({1, 1}));
  const std::vector<int> o2{0, 1};
  CHECK(bc_hvector(Matroid::uniform(1, 2), o2) == ints({1}));
  const std::vector<int> o4{0, 1, 2, 3};
  CHECK(bc_hvector(Matroid::uniform(4, 4), o4) == ints({1, 0, 0, 0}));
  const std::vector<int> bad{0, 0, 1};
  CHECK(code_of([&] { bc_hvector(Matroid::uniform(2, 3), bad); }) == ErrorCode::InvalidInput);

  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::random_matroid(6);
    std::vector<int> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    const auto h0 = bc_hvector(m, order);
    std::shuffle(order.begin(), order.end(), oracle::rng());
    CHECK(bc_hvector(m, order) == h0);
    const auto nabla = hstar_vector(m, bundle_from_polymatroid(m, nabla_polymatroid(m.size())));
    CHECK(nabla.hstar == h0);
  }
}

TEST_CASE("boolean matroid snapper counts lattice points") {
  for (int trial = 0; trial < 12; ++trial) {
    const Matroid src = oracle::random_matroid(5);
    const Polymatroid p = Polymatroid::from_matroid(src);
    const Matroid boolean = Matroid::uniform(src.size(), src.size());
    const ExactPoly chi = snapper_bundle(boolean, bundle_from_polymatroid(boolean, p));
    for (int t = 0; t <= 3; ++t) {
      const long at[] = {t};
      CHECK(chi.evaluate(std::span<const long>(at)) == Rational(static_cast<long>(oracle::ehrhart_count(p, t))));
    }
  }
}

TEST_CASE("sum of h* equals the top degree for full-dimensional bundles") {
  for (int trial = 0; trial < 15; ++trial) {
    const auto m = random_clean_matroid(6);
    if (!m || !is_connected(*m)) continue;
    const BundleSpec b = dual_bundle(*m);
    const HStarReport rep = hstar_vector(*m, b);
    if (rep.degree != m->rank() - 1) continue;
    Integer sum = 0;
    for (const auto& x : rep.hstar) sum += x;
    CHECK(sum == deg_top(*m, b));
  }
}

TEST_CASE("monotonicity harness") {
  const Matroid m = Matroid::uniform(2, 3);
  const Polymatroid p = dual_polymatroid(m);
  const auto same = monotonicity_check(m, p, p);
  CHECK(same.componentwise_le);
  CHECK(same.first.hstar == same.second.hstar);
  CHECK(std::all_of(same.comparison.begin(), same.comparison.end(), [](int c) { return c == 0; }));

  // segment inside the simplex on a boolean matroid
  const Matroid b = Matroid::uniform(2, 2);
  const Polymatroid point = Polymatroid::from_rank_table(2, {1, 1}, {0, 1, 0, 1});
  const Polymatroid simplex = Polymatroid::from_rank_table(2, {1, 1}, {0, 1, 1, 1});
  const auto rep = monotonicity_check(b, point, simplex);
  CHECK(rep.componentwise_le);
  CHECK(code_of([&] { monotonicity_check(b, simplex, point); }) == ErrorCode::NotNested);
  const Polymatroid big = Polymatroid::from_rank_table(2, {1, 1}, {0, 1, 1, 2});
  CHECK(code_of([&] { monotonicity_check(b, point, big); }) == ErrorCode::NotNested);
}
