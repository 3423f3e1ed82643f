#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mklab {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);
Integer binomial(long n, long k);  // zero when k < 0 or k > n >= 0; negative n allowed

// binom(x, k) = x(x-1)...(x-k+1)/k! as a polynomial identity in x.
Rational binomial(const Rational& x, long k);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integer

}  // namespace mklab
