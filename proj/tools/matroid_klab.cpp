// matroid-klab: command-line front end for the mklab library.
//
// Exit codes: 0 success, 1 domain error (error JSON on stderr), 2 I/O or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mklab/catalog.hpp"
#include "mklab/error.hpp"
#include "mklab/hstar.hpp"
#include "mklab/io.hpp"
#include "mklab/kclass.hpp"
#include "mklab/lorentzian.hpp"
#include "mklab/snapper.hpp"

using namespace mklab;

namespace {

struct Options {
  std::string matroid_path;
  std::string polymatroid_path;
  std::string poly_path;
  std::string bundle_path;
  std::string subsets;
  std::string exponents;
  std::string vector;
  std::string twist;
  std::string catalog = "small";
  bool augmented = false;
  bool denormalized = false;
  bool nabla = false;
  bool table = false;
  long upper_n = 0;
  int upper_d = 0;
};

Matroid load_matroid(const Options& o) {
  if (o.matroid_path.empty()) throw ParseError("--matroid is required");
  return matroid_from_json(read_json_file(o.matroid_path));
}

Polymatroid load_polymatroid(const Options& o) {
  return polymatroid_from_json(read_json_file(o.polymatroid_path));
}

std::vector<SubsetMask> load_subsets(const Options& o) {
  if (o.subsets.empty()) throw ParseError("--subsets is required");
  return parse_subsets(o.subsets);
}

// --bundle, --subsets/--exponents, --polymatroid (flat extraction) or --nabla
BundleSpec load_bundle(const Options& o, const Matroid& m) {
  if (!o.bundle_path.empty()) return bundle_from_json(read_json_file(o.bundle_path));
  if (o.nabla) return bundle_from_polymatroid(m, nabla_polymatroid(m.size()));
  if (!o.polymatroid_path.empty()) return bundle_from_polymatroid(m, load_polymatroid(o));
  BundleSpec b;
  b.subsets = load_subsets(o);
  b.exponents = parse_long_list(o.exponents);
  b.augmented = o.augmented;
  return b;
}

// Polymatroid from --polymatroid, or the restriction of --matroid to --subsets.
Polymatroid load_any_polymatroid(const Options& o) {
  if (!o.polymatroid_path.empty()) return load_polymatroid(o);
  const Matroid m = load_matroid(o);
  return restriction_polymatroid(m, load_subsets(o));
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_table(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "\t" << j.dump() << "\n";
  }
}

void emit(const Json& j, const Options& o) {
  if (o.table)
    render_table(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

// ---- experiments ----

std::vector<std::vector<SubsetMask>> subset_families(int n) {
  std::vector<std::vector<SubsetMask>> out;
  if (n < 2) return out;
  const int h = n / 2;
  out.push_back({full_mask(h), full_mask(n) & ~full_mask(h)});
  if (n >= 3) out.push_back({SubsetMask{1}, SubsetMask{2}, full_mask(n) & ~SubsetMask{3}});
  return out;
}

Json experiment_theorem11(const Options& o) {
  Json rows = Json::array();
  std::size_t checked = 0, failures = 0;
  for (const auto& nm : catalog_matroids(o.catalog)) {
    if (nm.matroid.size() > 7) continue;
    for (const auto& fam : subset_families(nm.matroid.size())) {
      const ExactPoly chi = snapper_aug(nm.matroid, fam);
      const KExpansion kx = knutson_coeffs(restriction_polymatroid(nm.matroid, fam));
      std::vector<long> k(fam.size(), 0);
      std::size_t bad = 0, points = 0;
      while (true) {
        ++points;
        if (to_integer(chi.evaluate(std::span<const long>(k))) != chi_Y(kx, k)) ++bad;
        std::size_t i = 0;
        while (i < k.size() && k[i] == 4) k[i++] = 0;
        if (i == k.size()) break;
        ++k[i];
      }
      checked += points;
      failures += bad;
      rows.push_back(Json{{"matroid", nm.name}, {"subsets", subsets_json(fam)}, {"points", points},
                          {"mismatches", bad}});
    }
  }
  return Json{{"experiment", "theorem1-1"}, {"catalog", o.catalog}, {"pairs", rows},
              {"points_checked", checked}, {"mismatches", failures}};
}

Json experiment_lorentzian(const Options& o) {
  Json rows = Json::array();
  for (const auto& nm : catalog_matroids(o.catalog)) {
    if (nm.matroid.size() > 6) continue;
    for (const auto& fam : subset_families(nm.matroid.size())) {
      const bool spanning = restriction_polymatroid(nm.matroid, fam).spanning_index() >= 0;
      const ExactPoly h = h_tilde(nm.matroid, fam);
      const LorentzianVerdict v = is_denorm_lorentzian(h);
      rows.push_back(Json{{"matroid", nm.name}, {"subsets", subsets_json(fam)}, {"spanning", spanning},
                          {"verdict", to_json(v)}});
    }
  }
  return Json{{"experiment", "lorentzian-sweep"}, {"catalog", o.catalog}, {"pairs", rows}};
}

Json experiment_macaulay(const Options& o) {
  Json rows = Json::array();
  for (const auto& nm : catalog_matroids(o.catalog)) {
    const Matroid& m = nm.matroid;
    if (m.size() > 6 || m.size() == 0 || m.has_loops()) continue;
    std::vector<std::pair<std::string, Polymatroid>> sources;
    sources.emplace_back("nabla", nabla_polymatroid(m.size()));
    sources.emplace_back("boolean", Polymatroid::from_matroid(Matroid::uniform(m.size(), m.size())));
    sources.emplace_back("self", Polymatroid::from_matroid(m));
    if (!m.has_coloops()) sources.emplace_back("dual", dual_polymatroid(m));
    for (const auto& [label, p] : sources) {
      const BundleSpec b = bundle_from_polymatroid(m, p);
      bool positive = true;
      for (long c : b.exponents) positive = positive && c >= 0;
      const HStarReport r = hstar_vector(m, b);
      Json row{{"matroid", nm.name}, {"polymatroid", label}, {"simplicially_positive", positive}};
      row["hstar"] = to_json(r)["hstar"];
      row["macaulay"] = to_json(r.macaulay);
      rows.push_back(std::move(row));
    }
  }
  return Json{{"experiment", "macaulay-sweep"}, {"catalog", o.catalog}, {"bundles", rows}};
}

Json experiment_monotonicity(const Options& o) {
  Json rows = Json::array();
  for (const auto& nm : catalog_matroids(o.catalog)) {
    const Matroid& m = nm.matroid;
    const int n = m.size();
    if (n > 6 || n < 3 || m.has_loops()) continue;
    // U(1,2) + U(k-1,n-2) sits inside U(k,n)
    for (int k = 1; k <= n - 1; ++k) {
      const Polymatroid big = Polymatroid::from_matroid(Matroid::uniform(k, n));
      const Polymatroid small = Polymatroid::from_matroid(
          direct_sum(Matroid::uniform(1, 2), Matroid::uniform(k - 1, n - 2)));
      const MonotonicityReport r = monotonicity_check(m, small, big);
      rows.push_back(Json{{"matroid", nm.name},
                          {"inner", "U(1,2)+U(" + std::to_string(k - 1) + "," + std::to_string(n - 2) + ")"},
                          {"outer", "U(" + std::to_string(k) + "," + std::to_string(n) + ")"},
                          {"inner_hstar", to_json(r.first)["hstar"]},
                          {"outer_hstar", to_json(r.second)["hstar"]},
                          {"comparison", r.comparison},
                          {"componentwise_le", r.componentwise_le}});
    }
  }
  return Json{{"experiment", "monotonicity"}, {"catalog", o.catalog}, {"pairs", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K-theoretic computations on matroids and polymatroids", "matroid-klab"};
  app.require_subcommand(1);
  Options o;
  auto output_flags = [&](CLI::App* sub) {
    auto* json = sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--table", o.table, "tab-separated key/value output")->excludes(json);
  };
  auto matroid_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--matroid", o.matroid_path, "matroid JSON file");
    if (required) opt->required();
  };
  auto bundle_opts = [&](CLI::App* sub) {
    sub->add_option("--subsets", o.subsets, "semicolon-separated element lists, e.g. \"0,1;2,3\"");
    sub->add_option("--exponents", o.exponents, "comma-separated bundle exponents");
    sub->add_flag("--augmented", o.augmented, "augmented ring");
    sub->add_option("--bundle", o.bundle_path, "bundle JSON file");
    sub->add_option("--polymatroid", o.polymatroid_path, "extract the bundle of this polymatroid");
    sub->add_flag("--nabla", o.nabla, "bundle of the reflected simplex");
  };

  std::function<Json()> run;

  auto* validate = app.add_subcommand("validate", "check a matroid, polymatroid or polynomial file");
  matroid_opt(validate, false);
  validate->add_option("--polymatroid", o.polymatroid_path, "polymatroid JSON file");
  validate->add_option("--poly", o.poly_path, "polynomial JSON file");
  output_flags(validate);
  validate->callback([&] {
    run = [&] {
      if (!o.matroid_path.empty()) {
        const Matroid m = load_matroid(o);
        return Json{{"valid", true}, {"kind", "matroid"}, {"n", m.size()}, {"rank", m.rank()},
                    {"loops", m.has_loops()}, {"coloops", m.has_coloops()},
                    {"components", connected_components(m).size()}};
      }
      if (!o.polymatroid_path.empty()) {
        const Polymatroid p = load_polymatroid(o);
        return Json{{"valid", true}, {"kind", "polymatroid"}, {"m", p.size()}, {"rank", p.rank()},
                    {"spanning_index", p.spanning_index()}};
      }
      if (!o.poly_path.empty()) {
        const ExactPoly f = poly_from_json(read_json_file(o.poly_path));
        return Json{{"valid", true}, {"kind", "polynomial"}, {"vars", f.num_vars()},
                    {"degree", f.total_degree()}, {"homogeneous", f.is_homogeneous()}};
      }
      throw ParseError("one of --matroid, --polymatroid, --poly is required");
    };
  });

  auto* snapper = app.add_subcommand("snapper", "Snapper polynomial of subsets or of a bundle");
  matroid_opt(snapper, true);
  bundle_opts(snapper);
  output_flags(snapper);
  snapper->callback([&] {
    run = [&] {
      const Matroid m = load_matroid(o);
      const bool bundle = !o.exponents.empty() || !o.bundle_path.empty() || o.nabla || !o.polymatroid_path.empty();
      if (!bundle) {
        const auto subsets = load_subsets(o);
        const ExactPoly chi = o.augmented ? snapper_aug(m, subsets) : snapper_nonaug(m, subsets);
        return Json{{"snapper", to_json(chi)}, {"power", to_json(convert_basis(chi, Basis::power))}};
      }
      const BundleSpec b = load_bundle(o, m);
      const ExactPoly chi = snapper_bundle(m, b);
      Json out{{"bundle", to_json(b)}, {"snapper", to_json(chi)}, {"degree", snapper_degree(chi)}};
      if (!b.augmented) out["deg_top"] = integer_json(deg_top(m, chi));
      return out;
    };
  });

  auto* hstar = app.add_subcommand("hstar", "h*-vector of a bundle");
  matroid_opt(hstar, true);
  bundle_opts(hstar);
  output_flags(hstar);
  hstar->callback([&] {
    run = [&] {
      const Matroid m = load_matroid(o);
      return to_json(hstar_vector(m, load_bundle(o, m)));
    };
  });

  auto* macaulay = app.add_subcommand("macaulay", "Macaulay test of a vector, or n^<d>");
  macaulay->add_option("--vector", o.vector, "comma-separated integers");
  macaulay->add_option("--upper", o.upper_n, "n for n^<d>");
  macaulay->add_option("--degree", o.upper_d, "d for n^<d>");
  output_flags(macaulay);
  macaulay->callback([&] {
    run = [&] {
      if (!o.vector.empty()) {
        std::vector<Integer> v;
        for (long x : parse_long_list(o.vector)) v.emplace_back(x);
        return to_json(is_macaulay(v));
      }
      if (o.upper_d == 0) throw ParseError("--vector or --upper with --degree is required");
      const MacaulayRep rep = macaulay_rep(Integer(o.upper_n), o.upper_d);
      Json binoms = Json::array();
      for (const auto& [k, i] : rep.binomials) binoms.push_back(Json::array({integer_json(k), i}));
      return Json{{"n", o.upper_n}, {"d", o.upper_d}, {"representation", binoms},
                  {"upper", integer_json(macaulay_upper(rep.n, rep.d))}};
    };
  });

  auto* kclass = app.add_subcommand("kclass", "Knutson coefficients of a polymatroid");
  matroid_opt(kclass, false);
  kclass->add_option("--polymatroid", o.polymatroid_path, "polymatroid JSON file");
  kclass->add_option("--subsets", o.subsets, "restrict the matroid to these element lists");
  kclass->add_option("--twist", o.twist, "comma-separated k at which to evaluate chi");
  output_flags(kclass);
  kclass->callback([&] {
    run = [&] {
      const KExpansion kx = knutson_coeffs(load_any_polymatroid(o));
      Json out = to_json(kx);
      if (!o.twist.empty()) out["chi"] = integer_json(chi_Y(kx, parse_long_list(o.twist)));
      return out;
    };
  });

  auto* gpoly = app.add_subcommand("gpoly", "g-polynomial of a polymatroid");
  matroid_opt(gpoly, false);
  gpoly->add_option("--polymatroid", o.polymatroid_path, "polymatroid JSON file");
  gpoly->add_option("--subsets", o.subsets, "restrict the matroid to these element lists");
  output_flags(gpoly);
  gpoly->callback([&] {
    run = [&] {
      const Polymatroid p = load_any_polymatroid(o);
      const ExactPoly g = g_poly(p);
      return Json{{"g", to_json(g)}, {"spanning_index", p.spanning_index()},
                  {"denormalized_lorentzian", to_json(is_denorm_lorentzian(g))}};
    };
  });

  auto* lorentz = app.add_subcommand("lorentzian", "Lorentzian certificate of a polynomial");
  lorentz->add_option("--poly", o.poly_path, "polynomial JSON file")->required();
  lorentz->add_flag("--denormalized", o.denormalized, "test N(f) instead of f");
  output_flags(lorentz);
  lorentz->callback([&] {
    run = [&] {
      const ExactPoly f = poly_from_json(read_json_file(o.poly_path));
      return to_json(o.denormalized ? is_denorm_lorentzian(f) : is_lorentzian(f));
    };
  });

  auto* omega_cmd = app.add_subcommand("omega", "top coefficient of the g-polynomial");
  matroid_opt(omega_cmd, true);
  output_flags(omega_cmd);
  omega_cmd->callback([&] {
    run = [&] { return Json{{"omega", integer_json(omega(load_matroid(o)))}}; };
  });

  auto* lift = app.add_subcommand("lift", "multisymmetric lift of a polymatroid");
  lift->add_option("--polymatroid", o.polymatroid_path, "polymatroid JSON file")->required();
  output_flags(lift);
  lift->callback([&] { run = [&] { return to_json(multisymmetric_lift(load_polymatroid(o))); }; });

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction polymatroid of subsets");
  matroid_opt(restrict_cmd, true);
  restrict_cmd->add_option("--subsets", o.subsets, "semicolon-separated element lists, e.g. \"0,1;2,3\"")->required();
  output_flags(restrict_cmd);
  restrict_cmd->callback([&] {
    run = [&] { return to_json(restriction_polymatroid(load_matroid(o), load_subsets(o))); };
  });

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial and beta invariant");
  matroid_opt(tutte_cmd, true);
  output_flags(tutte_cmd);
  tutte_cmd->callback([&] {
    run = [&] {
      const Matroid m = load_matroid(o);
      return Json{{"tutte", to_json(tutte(m))}, {"beta", integer_json(beta(m))}};
    };
  });

  auto* experiment = app.add_subcommand("experiment", "catalog sweeps");
  experiment->require_subcommand(1);
  auto add_experiment = [&](const char* name, const char* help, Json (*fn)(const Options&)) {
    auto* sub = experiment->add_subcommand(name, help);
    sub->add_option("--catalog", o.catalog, "matroid family")
        ->check(CLI::IsMember(catalog_families()));
    output_flags(sub);
    sub->callback([&, fn] { run = [&, fn] { return fn(o); }; });
  };
  add_experiment("theorem1-1", "Hall-Rado sum against the Knutson expansion", experiment_theorem11);
  add_experiment("lorentzian-sweep", "denormalized Lorentzian test of H-tilde", experiment_lorentzian);
  add_experiment("macaulay-sweep", "Macaulay test of h* over extracted bundles", experiment_macaulay);
  add_experiment("monotonicity", "h* comparison for nested base polytopes", experiment_monotonicity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    emit(run(), o);
    return 0;
  } catch (const Error& e) {
    std::cerr << to_json(e).dump() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << Json{{"code", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"code", "InternalInconsistency"}, {"message", e.what()}, {"witness", Json::array()}}.dump()
              << "\n";
    return 1;
  }
}
