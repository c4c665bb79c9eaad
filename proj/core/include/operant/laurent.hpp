#pragma once

#include "operant/trig_element.hpp"

#include <map>
#include <optional>
#include <string>

namespace operant {

// Laurent polynomial in z over the coefficient field; no zero entries stored.
// When sqrt(sigma) = lambda exists in the field, the ring with integer
// indices is isomorphic to these via
//   C[1] -> (z^-1 + z)/2,   S[1] -> (z^-1 - z)/(2 lambda),
// whose inverse sends z -> C[1] - lambda*S[1].
struct LaurentPoly {
  Var var;
  std::map<long, RatFun> c;

  explicit LaurentPoly(Var v) : var(v) {}

  bool is_zero() const { return c.empty(); }
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  bool is_monomial() const { return c.size() == 1; }

  void add(long e, const RatFun& k);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(long k) const;  // multiply by z^k
  bool operator==(const LaurentPoly& o) const { return var == o.var && c == o.c; }

  std::string str() const;
};

// Requires integer indices (rescale first) and nonzero lambda.
LaurentPoly to_laurent(const TrigElement& p, const RatFun& lambda);
TrigElement from_laurent(const LaurentPoly& L, const RingTag& tag, const RatFun& lambda);

// Exact quotient in the Laurent ring (z is a unit), or nullopt.
std::optional<LaurentPoly> laurent_divide(const LaurentPoly& p, const LaurentPoly& d);

// exact_div through the Laurent image for arbitrary rational indices.
std::optional<TrigElement> laurent_exact_div(const TrigElement& p, const TrigElement& d,
                                             const RatFun& lambda);

// True iff p is a unit of the ring in its configuration: a nonzero field
// constant always qualifies; when sqrt(sigma) exists the Laurent image may
// also be a single monomial (index-shift operators are invertible there).
bool is_ring_unit(const TrigElement& p);

// Multiplicative inverse of a ring unit; nullopt when p is not a unit.
std::optional<TrigElement> ring_unit_inverse(const TrigElement& p);

}  // namespace operant
