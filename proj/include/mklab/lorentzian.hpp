#pragma once

#include <optional>
#include <variant>

#include "mklab/poly.hpp"
#include "mklab/polymatroid.hpp"
#include "mklab/signature.hpp"

namespace mklab {

struct NotHomogeneous {
  Exponents first;
  Exponents second;  // a term of different total degree
};

struct NegativeCoefficient {
  Exponents term;
  Rational coefficient;
};

struct SupportNotMConvex {
  MConvexWitness witness;
};

struct BadSignature {
  Exponents alpha;  // derivative multi-index, |alpha| = d - 2
  Signature signature;
};

using LorentzianFailure = std::variant<NotHomogeneous, NegativeCoefficient, SupportNotMConvex, BadSignature>;

struct LorentzianVerdict {
  bool lorentzian = true;
  std::optional<LorentzianFailure> failure;
};

// Power-basis f: nonnegative coefficients, homogeneous of some degree d,
// M-convex support, and every nonzero (d-2)-th partial derivative has a
// Hessian with at most one positive eigenvalue.
LorentzianVerdict is_lorentzian(const ExactPoly& f);

// is_lorentzian(normalize(f))
LorentzianVerdict is_denorm_lorentzian(const ExactPoly& f);

// Support as a lattice point set.
LatticePointSet support(const ExactPoly& f);

// Second opinion on M-convexity for small dimension: the support is M-convex
// iff the hull rank table is a polymatroid whose base points are exactly the
// support.
bool support_is_polymatroid_base(const LatticePointSet& pts);

}  // namespace mklab
