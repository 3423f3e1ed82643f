#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mklab/error.hpp"
#include "mklab/hstar.hpp"
#include "mklab/kclass.hpp"
#include "mklab/lorentzian.hpp"
#include "mklab/matroid.hpp"
#include "mklab/poly.hpp"
#include "mklab/polymatroid.hpp"
#include "mklab/snapper.hpp"

namespace mklab {

using Json = nlohmann::ordered_json;

// Malformed input: unreadable file, bad JSON, missing or mistyped fields,
// unparsable flag values. Distinct from Error, which is a domain failure.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);

// {"n", "rank"} or {"n", "bases"}
Matroid matroid_from_json(const Json& j);
Json to_json(const Matroid& m);
Polymatroid polymatroid_from_json(const Json& j);
Json to_json(const Polymatroid& p);
ExactPoly poly_from_json(const Json& j);
Json to_json(const ExactPoly& f);
BundleSpec bundle_from_json(const Json& j);
Json to_json(const BundleSpec& b);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& z);
Json to_json(const KExpansion& kx);
Json to_json(const Signature& s);
Json to_json(const MConvexWitness& w);
Json to_json(const LorentzianVerdict& v);
Json to_json(const MacaulayVerdict& v);
Json to_json(const HStarReport& r);
Json to_json(const SimplicialHypothesis& h);
Json to_json(const MonotonicityReport& r);
Json to_json(const MatroidCaseResult& r);
Json to_json(const Lift& lift);
Json to_json(const LatticePointSet& pts);
Json to_json(const Error& e);

Json subsets_json(std::span<const SubsetMask> subsets);

// "1,-2" -> {1, -2}; empty text -> {}
std::vector<long> parse_long_list(std::string_view text);
// "0,1;2,3" -> {{0,1}, {2,3}} as masks
std::vector<SubsetMask> parse_subsets(std::string_view text);

}  // namespace mklab
