#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace operant {

// Exact arbitrary-precision rationals on the GMP backend.  mpq keeps the
// value reduced with a positive denominator, which is exactly the canonical
// form we need, and GMP's subquadratic multiplication and gcd are what make
// the remainder-sequence algorithms viable at the coefficient sizes the
// euclidean chains produce.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p/q" or "p" (optionally signed).  Throws ParseError on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical textual form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Square root within the rationals: returns the nonnegative root when both
// numerator and denominator are perfect squares, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& r);

// lcm of denominators; used for index-grid rescaling.
Integer denominator_of(const Rational& r);
Integer numerator_of(const Rational& r);

}  // namespace operant
