#include "mklab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mklab/error.hpp"

namespace mklab {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::power: return "power";
    case Basis::rising: return "rising";
    case Basis::shifted: return "shifted";
  }
  return "power";
}

Basis parse_basis(std::string_view name) {
  if (name == "power") return Basis::power;
  if (name == "rising") return Basis::rising;
  if (name == "shifted") return Basis::shifted;
  throw Error(ErrorCode::InvalidInput, "unknown basis '" + std::string(name) + "'");
}

ExactPoly::ExactPoly(std::vector<std::string> vars, Basis basis)
    : vars_(std::move(vars)), basis_(basis) {}

ExactPoly ExactPoly::constant(std::vector<std::string> vars, const Rational& c, Basis basis) {
  ExactPoly p(std::move(vars), basis);
  p.add_term(Exponents(p.num_vars(), 0), c);
  return p;
}

ExactPoly ExactPoly::variable(std::vector<std::string> vars, std::size_t index) {
  ExactPoly p(std::move(vars));
  Exponents e(p.num_vars(), 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

Rational ExactPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExactPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw Error(ErrorCode::InvalidInput, "exponent length does not match variable count");
  Rational v = c;
  v.canonicalize();  // gmp arithmetic assumes canonical operands
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

int ExactPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

bool ExactPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return degree_of(t.first) == d; });
}

Rational basis_function(Basis b, int k, const Rational& x) {
  switch (b) {
    case Basis::power: {
      Rational r = 1;
      for (int j = 0; j < k; ++j) r *= x;
      return r;
    }
    case Basis::rising: return binomial(Rational(x + k - 1), k);
    case Basis::shifted: return binomial(Rational(x + k), k);
  }
  return 0;
}

Rational ExactPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorCode::InvalidInput, "evaluation point has wrong dimension");
  // Cache basis values per variable; exponents are small.
  std::vector<std::vector<Rational>> cache(vars_.size());
  auto value = [&](std::size_t v, int k) -> const Rational& {
    auto& row = cache[v];
    while (static_cast<int>(row.size()) <= k)
      row.push_back(basis_function(basis_, static_cast<int>(row.size()), point[v]));
    return row[k];
  };
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term *= value(v, e[v]);
    total += term;
  }
  return total;
}

Rational ExactPoly::evaluate(std::span<const long> point) const {
  std::vector<Rational> q(point.begin(), point.end());
  return evaluate(std::span<const Rational>(q));
}

void ExactPoly::require_compatible(const ExactPoly& other) const {
  if (vars_ != other.vars_)
    throw Error(ErrorCode::InvalidInput, "polynomials have different variables");
  if (basis_ != other.basis_)
    throw Error(ErrorCode::BasisMismatch, "polynomials are in different bases");
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  a.require_compatible(b);
  if (a.basis_ != Basis::power)
    throw Error(ErrorCode::BasisMismatch, "multiplication needs the power basis");
  ExactPoly r(a.vars_);
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = degree_of(e) == 0;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) out << '*';
      out << vars_[v];
      switch (basis_) {
        case Basis::power:
          if (e[v] != 1) out << '^' << e[v];
          break;
        case Basis::rising: out << "^(" << e[v] << ')'; break;
        case Basis::shifted: out << "^[" << e[v] << ']'; break;
      }
      need_star = true;
    }
  }
  return out.str();
}

std::vector<std::string> indexed_vars(std::string_view prefix, std::size_t count,
                                      std::size_t first) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

std::vector<std::vector<Rational>> power_expansion(Basis b, int degree) {
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k <= degree; ++k) {
    // product of the linear factors (t + offset), offsets 0..k-1 (rising) or 1..k (shifted)
    std::vector<Rational> poly{1};
    if (b == Basis::power) {
      poly.assign(k + 1, 0);
      poly[k] = 1;
    } else {
      const int start = b == Basis::rising ? 0 : 1;
      for (int j = start; j < start + k; ++j) {
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] += poly[i];
          next[i] += poly[i] * j;
        }
        poly = std::move(next);
      }
      const Rational kf(factorial(static_cast<unsigned>(k)));
      for (auto& c : poly) c /= kf;
    }
    rows.push_back(std::move(poly));
  }
  return rows;
}

namespace {

// Row i: coefficients of t^i in the basis b_0, ..., b_i.
std::vector<std::vector<Rational>> inverse_expansion(Basis b, int degree) {
  const auto p = power_expansion(b, degree);
  std::vector<std::vector<Rational>> q(degree + 1, std::vector<Rational>(degree + 1, 0));
  for (int i = 0; i <= degree; ++i) {
    // b_i = p[i][i] t^i + sum_{j<i} p[i][j] t^j
    q[i][i] = 1;
    for (int j = 0; j < i; ++j)
      for (int k = 0; k <= j; ++k) q[i][k] -= p[i][j] * q[j][k];
    for (auto& c : q[i]) c /= p[i][i];
  }
  return q;
}

}  // namespace

ExactPoly convert_basis(const ExactPoly& f, Basis target) {
  if (f.basis() == target) return f;
  int degree = 0;
  for (const auto& [e, c] : f.terms())
    for (int k : e) degree = std::max(degree, k);
  const auto src = power_expansion(f.basis(), degree);
  const auto inv = inverse_expansion(target, degree);
  // conv[k][j] = coefficient of target b_j in source b_k
  std::vector<std::vector<Rational>> conv(degree + 1, std::vector<Rational>(degree + 1, 0));
  for (int k = 0; k <= degree; ++k)
    for (int i = 0; i <= k; ++i) {
      if (src[k][i] == 0) continue;
      for (int j = 0; j <= i; ++j) conv[k][j] += src[k][i] * inv[i][j];
    }

  std::map<Exponents, Rational> current = f.terms();
  for (std::size_t v = 0; v < f.num_vars(); ++v) {
    std::map<Exponents, Rational> next;
    for (const auto& [e, c] : current) {
      Exponents e2 = e;
      for (int j = 0; j <= e[v]; ++j) {
        if (conv[e[v]][j] == 0) continue;
        e2[v] = j;
        next[e2] += c * conv[e[v]][j];
      }
    }
    current = std::move(next);
  }
  ExactPoly out(f.vars(), target);
  for (const auto& [e, c] : current) out.add_term(e, c);
  return out;
}

ExactPoly substitute_ray(const ExactPoly& f, std::span<const long> c, const std::string& var) {
  if (f.basis() != Basis::power)
    throw Error(ErrorCode::BasisMismatch, "substitute_ray needs the power basis");
  if (c.size() != f.num_vars())
    throw Error(ErrorCode::InvalidInput, "ray length does not match variable count");
  ExactPoly out({var});
  for (const auto& [e, coef] : f.terms()) {
    Integer scale = 1;
    int degree = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(c[v]).get_mpz_t(), static_cast<unsigned long>(e[v]));
      scale *= p;
      degree += e[v];
    }
    out.add_term({degree}, coef * Rational(scale));
  }
  return out;
}

ExactPoly homogenize(const ExactPoly& f, int d, const std::string& new_var) {
  if (f.basis() != Basis::power)
    throw Error(ErrorCode::BasisMismatch, "homogenize needs the power basis");
  std::vector<std::string> vars{new_var};
  vars.insert(vars.end(), f.vars().begin(), f.vars().end());
  ExactPoly out(std::move(vars));
  for (const auto& [e, c] : f.terms()) {
    const int k = degree_of(e);
    if (k > d)
      throw Error(ErrorCode::DegreeExceeded,
                  "term of degree " + std::to_string(k) + " exceeds " + std::to_string(d));
    Exponents e2{d - k};
    e2.insert(e2.end(), e.begin(), e.end());
    out.add_term(e2, c);
  }
  return out;
}

ExactPoly normalize(const ExactPoly& f) {
  if (f.basis() != Basis::power)
    throw Error(ErrorCode::BasisMismatch, "normalize needs the power basis");
  ExactPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Integer denom = 1;
    for (int k : e) denom *= factorial(static_cast<unsigned>(k));
    out.add_term(e, c / Rational(denom));
  }
  return out;
}

ExactPoly derivative(const ExactPoly& f, std::size_t var, int order) {
  Exponents alpha(f.num_vars(), 0);
  alpha.at(var) = order;
  return derivative(f, alpha);
}

ExactPoly derivative(const ExactPoly& f, const Exponents& alpha) {
  if (f.basis() != Basis::power)
    throw Error(ErrorCode::BasisMismatch, "derivative needs the power basis");
  if (alpha.size() != f.num_vars())
    throw Error(ErrorCode::InvalidInput, "derivative multi-index has wrong length");
  ExactPoly out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponents e2 = e;
    Integer falling = 1;
    bool vanishes = false;
    for (std::size_t v = 0; v < e.size() && !vanishes; ++v) {
      if (alpha[v] > e[v]) {
        vanishes = true;
        break;
      }
      for (int j = 0; j < alpha[v]; ++j) falling *= (e[v] - j);
      e2[v] = e[v] - alpha[v];
    }
    if (!vanishes) out.add_term(e2, c * Rational(falling));
  }
  return out;
}

}  // namespace mklab
