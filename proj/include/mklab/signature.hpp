#pragma once

#include <vector>

#include "mklab/poly.hpp"
#include "mklab/rational.hpp"

namespace mklab {

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

using SymmetricMatrix = std::vector<std::vector<Rational>>;

// Exact congruence diagonalization. A zero diagonal with a nonzero
// off-diagonal entry is split off as a hyperbolic 2x2 block.
Signature signature_of(SymmetricMatrix a);

// Hessian of a quadratic form: H_ii = 2 c(t_i^2), H_ij = c(t_i t_j).
SymmetricMatrix hessian(const ExactPoly& q);

// Throws Error(NotQuadratic) unless q is a power-basis form of degree 2
// (the zero polynomial is accepted).
Signature hessian_signature(const ExactPoly& q);

}  // namespace mklab
