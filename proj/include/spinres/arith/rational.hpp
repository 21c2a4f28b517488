#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spinres {

using Integer = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every arithmetic
// operation; values built from a raw pair go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

// Rising factorial (a)_l = a (a+1) ... (a+l-1); (a)_0 = 1.
Rational rising(const Rational& a, unsigned l);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace spinres
