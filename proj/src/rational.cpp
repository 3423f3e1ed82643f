#include "mklab/rational.hpp"

#include <cctype>

#include "mklab/error.hpp"

namespace mklab {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (long j = 0; j < k; ++j) acc *= (x - j);
  acc /= Rational(factorial(static_cast<unsigned>(k)));
  return acc;
}

// Tolerates non-canonical input such as mpq_class(4, 2).
bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q))
    throw Error(ErrorCode::InternalInconsistency, "expected an integer, got " + to_string(q));
  return Integer(q.get_num() / q.get_den());
}

}  // namespace mklab
