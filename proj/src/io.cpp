#include "mklab/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mklab {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

SubsetMask mask_from_json(const Json& list) {
  SubsetMask s = 0;
  for (const auto& x : list) {
    const int e = x.get<int>();
    if (e < 0 || e >= kMaxGroundSet) throw ParseError("element " + std::to_string(e) + " out of range");
    s |= SubsetMask{1} << e;
  }
  return s;
}

Json elements_json(SubsetMask s) { return Json(elements_of(s)); }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Matroid matroid_from_json(const Json& j) {
  auto [n, table, bases] = guarded("matroid", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("matroid: negative n");
    std::vector<int> table;
    std::vector<SubsetMask> bases;
    if (j.contains("rank")) {
      table = j.at("rank").get<std::vector<int>>();
    } else if (j.contains("bases")) {
      for (const auto& b : j.at("bases")) bases.push_back(mask_from_json(b));
    } else {
      throw ParseError("matroid: need \"rank\" or \"bases\"");
    }
    return std::tuple{n, table, bases};
  });
  if (!j.contains("rank")) return Matroid::from_bases(n, bases);
  return Matroid::from_rank_table(n, std::move(table));
}

Json to_json(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  j["rank"] = std::vector<int>(m.rank_table().begin(), m.rank_table().end());
  return j;
}

Polymatroid polymatroid_from_json(const Json& j) {
  auto [m, cage, table] = guarded("polymatroid", [&] {
    return std::tuple{j.at("m").get<int>(), j.at("cage").get<std::vector<int>>(),
                      j.at("rank").get<std::vector<int>>()};
  });
  return Polymatroid::from_rank_table(m, std::move(cage), std::move(table));
}

Json to_json(const Polymatroid& p) {
  Json j;
  j["m"] = p.size();
  j["cage"] = std::vector<int>(p.cage().begin(), p.cage().end());
  j["rank"] = std::vector<int>(p.rank_table().begin(), p.rank_table().end());
  return j;
}

ExactPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    Basis basis = Basis::power;
    if (j.contains("basis")) {
      try {
        basis = parse_basis(j.at("basis").get<std::string>());
      } catch (const Error& e) {
        throw ParseError(std::string("polynomial: ") + e.what());
      }
    }
    ExactPoly f(vars, basis);
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("exp").get<Exponents>();
      if (e.size() != vars.size()) throw ParseError("polynomial: exponent length differs from vars");
      for (int x : e)
        if (x < 0) throw ParseError("polynomial: negative exponent");
      Rational c;
      const Json& coef = t.at("coef");
      try {
        c = coef.is_string() ? parse_rational(coef.get<std::string>()) : Rational(coef.get<long>());
      } catch (const Error& err) {
        throw ParseError(std::string("polynomial: ") + err.what());
      }
      f.add_term(e, c);
    }
    return f;
  });
}

Json to_json(const ExactPoly& f) {
  Json j;
  j["vars"] = f.vars();
  j["basis"] = std::string(to_string(f.basis()));
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", e}, {"coef", to_string(c)}});
  j["terms"] = std::move(terms);
  return j;
}

BundleSpec bundle_from_json(const Json& j) {
  return guarded("bundle", [&] {
    BundleSpec b;
    for (const auto& s : j.at("subsets")) b.subsets.push_back(mask_from_json(s));
    b.exponents = j.at("exponents").get<std::vector<long>>();
    b.augmented = j.value("augmented", false);
    return b;
  });
}

Json subsets_json(std::span<const SubsetMask> subsets) {
  Json out = Json::array();
  for (SubsetMask s : subsets) out.push_back(elements_json(s));
  return out;
}

Json to_json(const BundleSpec& b) {
  Json j;
  j["subsets"] = subsets_json(b.subsets);
  j["exponents"] = b.exponents;
  j["augmented"] = b.augmented;
  return j;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const KExpansion& kx) {
  Json j;
  j["cage"] = kx.cage;
  Json coeffs = Json::array();
  for (const auto& [b, c] : kx.ordered()) coeffs.push_back(Json{{"b", b}, {"c", c}});
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const Signature& s) {
  return Json{{"positives", s.positives}, {"negatives", s.negatives}, {"zeros", s.zeros}};
}

Json to_json(const MConvexWitness& w) {
  Json j;
  switch (w.reason) {
    case MConvexWitness::Reason::unequal_sum: j["reason"] = "unequal_sum"; break;
    case MConvexWitness::Reason::negative_coordinate: j["reason"] = "negative_coordinate"; break;
    case MConvexWitness::Reason::exchange: j["reason"] = "exchange"; break;
  }
  j["alpha"] = w.alpha;
  j["beta"] = w.beta;
  if (w.index >= 0) j["index"] = w.index;
  return j;
}

Json to_json(const LorentzianVerdict& v) {
  Json j;
  j["lorentzian"] = v.lorentzian;
  if (!v.failure) return j;
  j["failure"] = std::visit(
      [](const auto& f) -> Json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, NotHomogeneous>)
          return Json{{"kind", "not_homogeneous"}, {"first", f.first}, {"second", f.second}};
        else if constexpr (std::is_same_v<T, NegativeCoefficient>)
          return Json{{"kind", "negative_coefficient"}, {"term", f.term}, {"coef", to_string(f.coefficient)}};
        else if constexpr (std::is_same_v<T, SupportNotMConvex>)
          return Json{{"kind", "support_not_m_convex"}, {"witness", to_json(f.witness)}};
        else
          return Json{{"kind", "bad_signature"}, {"alpha", f.alpha}, {"signature", to_json(f.signature)}};
      },
      *v.failure);
  return j;
}

Json to_json(const MacaulayVerdict& v) {
  Json j;
  j["macaulay"] = v.macaulay;
  if (v.violation_index) j["violation_index"] = *v.violation_index;
  return j;
}

Json to_json(const HStarReport& r) {
  Json j;
  j["snapper"] = to_json(r.snapper);
  j["d"] = r.degree;
  Json h = Json::array();
  for (const auto& x : r.hstar) h.push_back(integer_json(x));
  j["hstar"] = std::move(h);
  j["macaulay"] = to_json(r.macaulay);
  j["top_identity_checked"] = r.top_identity_checked;
  return j;
}

Json to_json(const SimplicialHypothesis& h) {
  Json j;
  j["holds"] = h.holds;
  Json flats = Json::array();
  for (const auto& f : h.flats)
    flats.push_back(Json{{"flat", elements_json(f.flat)},
                         {"coefficient", integer_json(f.coefficient)},
                         {"sign", sgn(f.coefficient)}});
  j["flats"] = std::move(flats);
  return j;
}

Json to_json(const MonotonicityReport& r) {
  Json j;
  j["first"] = to_json(r.first);
  j["second"] = to_json(r.second);
  j["comparison"] = r.comparison;
  j["componentwise_le"] = r.componentwise_le;
  return j;
}

Json to_json(const MatroidCaseResult& r) {
  Json j;
  j["ok"] = r.ok;
  if (r.mismatch)
    j["mismatch"] = Json{{"independent_set", elements_json(r.mismatch->independent_set)},
                         {"expected", to_string(r.mismatch->expected)},
                         {"actual", to_string(r.mismatch->actual)}};
  return j;
}

Json to_json(const Lift& lift) {
  Json j;
  j["matroid"] = to_json(lift.matroid);
  j["blocks"] = subsets_json(lift.blocks);
  return j;
}

Json to_json(const LatticePointSet& pts) {
  Json j;
  j["dimension"] = pts.dimension;
  j["points"] = pts.points;
  return j;
}

Json to_json(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
}

std::vector<long> parse_long_list(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long v = 0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || p != item.data() + item.size())
      throw ParseError("not an integer: '" + std::string(item) + "'");
    out.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<SubsetMask> parse_subsets(std::string_view text) {
  std::vector<SubsetMask> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    SubsetMask s = 0;
    for (long e : parse_long_list(text.substr(start, end - start))) {
      if (e < 0 || e >= kMaxGroundSet) throw ParseError("element " + std::to_string(e) + " out of range");
      s |= SubsetMask{1} << e;
    }
    out.push_back(s);
    start = end + 1;
  }
  return out;
}

}  // namespace mklab
