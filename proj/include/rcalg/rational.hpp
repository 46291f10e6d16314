#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rcalg {

// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Parses "a" or "a/b" with optional leading sign. Throws ValidationError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
bool is_nonpositive_integer(const Rational& q);

// Exact integer value; the argument must be an integer.
long to_long(const Rational& q);

Integer factorial(unsigned long n);

// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned n);

// Generalized binomial x(x-1)...(x-j+1)/j!.
Rational gen_binomial(const Rational& x, unsigned j);

inline int sign_power(unsigned n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace rcalg
