#include "operant/rational.hpp"

#include "operant/errors.hpp"

namespace operant {

namespace {

// Strict [+-]?digits literal.  The bignum string constructors differ across
// backends on sign and radix-prefix handling, so validate the charset here.
Integer parse_integer(const std::string& text, const std::string& whole) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("malformed rational literal: " + whole);
  Integer v(t);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("rational literal with zero denominator: " + text);
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Integer denominator_of(const Rational& r) { return denominator(r); }
Integer numerator_of(const Rational& r) { return numerator(r); }

}  // namespace operant
