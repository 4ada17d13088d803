#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzv {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (GMP canonicalizes every arithmetic result).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q"; throws ParseError otherwise or on q = 0.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace mzv
