#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mklab/rational.hpp"

namespace mklab {

// Per-variable basis of a polynomial:
//   power    t^k
//   rising   t^(k) = t(t+1)...(t+k-1)/k!
//   shifted  t^[k] = binom(t+k, k)
enum class Basis { power, rising, shifted };

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view name);

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// in lexicographic exponent order and zero coefficients are never stored.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<std::string> vars, Basis basis = Basis::power);

  static ExactPoly constant(std::vector<std::string> vars, const Rational& c,
                            Basis basis = Basis::power);
  // Single power-basis variable of the given index.
  static ExactPoly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  Basis basis() const { return basis_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;  // the zero polynomial counts as homogeneous

  // Works in any basis: each basis function is evaluated directly.
  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const long> point) const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& other);
  ExactPoly& operator-=(const ExactPoly& other);
  ExactPoly& operator*=(const Rational& c);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const Rational& c) { return a *= c; }
  // Power basis only.
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) = default;

  std::string to_string() const;

 private:
  void require_compatible(const ExactPoly& other) const;

  std::vector<std::string> vars_;
  Basis basis_ = Basis::power;
  std::map<Exponents, Rational> terms_;
};

// "t1", ..., "tm" (or prefix + index from first).
std::vector<std::string> indexed_vars(std::string_view prefix, std::size_t count,
                                      std::size_t first = 1);

ExactPoly convert_basis(const ExactPoly& f, Basis target);

// t_i := c_i * t; result is univariate in `var`, power basis.
ExactPoly substitute_ray(const ExactPoly& f, std::span<const long> c,
                         const std::string& var = "t");

// Pads each term with new_var^(d - |k|); the new variable is placed first.
ExactPoly homogenize(const ExactPoly& f, int d, const std::string& new_var);

// Divides each coefficient by k! = prod k_i!.
ExactPoly normalize(const ExactPoly& f);

ExactPoly derivative(const ExactPoly& f, std::size_t var, int order = 1);
ExactPoly derivative(const ExactPoly& f, const Exponents& alpha);

// Power-basis coefficient table of the univariate basis functions b_0..b_degree:
// row k holds the coefficients of b_k(t) in 1, t, t^2, ...
std::vector<std::vector<Rational>> power_expansion(Basis b, int degree);

// Value of the univariate basis function b_k at x.
Rational basis_function(Basis b, int k, const Rational& x);

}  // namespace mklab
