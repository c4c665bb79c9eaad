#pragma once

#include "operant/sigma.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>

namespace operant {

// Ring context shared by all elements that may legally interact: the sigma
// specification plus the base length ell (the unit step of the index lattice
// under Laplace evaluation).
struct RingTag {
  SigmaSpec sigma;
  Rational ell{1};

  Var var() const { return sigma.var(); }
  bool operator==(const RingTag& o) const { return sigma == o.sigma && ell == o.ell; }
  bool operator!=(const RingTag& o) const { return !(*this == o); }
};

enum class TrigKind { C, S };

struct TrigPair {
  RatFun c;
  RatFun s;
  bool operator==(const TrigPair& o) const { return c == o.c && s == o.s; }
};

// Element of the operator ring: a finite sum  sum_alpha  c_alpha*C[alpha] +
// s_alpha*S[alpha]  with nonnegative rational indices and coefficients in the
// tagged field.  Normal form: indices >= 0 (negative indices fold through
// C[-a] = C[a], S[-a] = -S[a]), no all-zero pairs, no S component at index 0.
// All operations are pure; elements are immutable values.
class TrigElement {
 public:
  explicit TrigElement(RingTag tag) : tag_(std::move(tag)) {}

  static TrigElement zero(const RingTag& tag) { return TrigElement(tag); }
  static TrigElement one(const RingTag& tag);
  static TrigElement scalar(const RingTag& tag, const RatFun& k);
  static TrigElement scalar(const RingTag& tag, const Rational& k);

  const RingTag& tag() const { return tag_; }
  const SigmaSpec& sigma() const { return tag_.sigma; }
  const Rational& ell() const { return tag_.ell; }
  const std::map<Rational, TrigPair>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Highest index carrying a nonzero coefficient; nullopt (bottom) for zero.
  std::optional<Rational> norm() const;
  TrigPair leading_pair() const;  // at the norm index; requires nonzero
  RatFun coeff(TrigKind kind, const Rational& alpha) const;
  // Constant part (the C coefficient at index 0).
  RatFun constant_part() const;

  TrigElement operator-() const;
  TrigElement operator+(const TrigElement& o) const;
  TrigElement operator-(const TrigElement& o) const;
  TrigElement operator*(const TrigElement& o) const;
  TrigElement operator*(const RatFun& k) const;
  TrigElement operator*(const Rational& k) const;
  TrigElement pow(unsigned n) const;
  bool operator==(const TrigElement& o) const { return tag_ == o.tag_ && terms_ == o.terms_; }
  bool operator!=(const TrigElement& o) const { return !(*this == o); }

  // Multiplies every index by factor > 0.  This is the index-lattice
  // isomorphism used by the gcd engines; callers pair it with the inverse.
  TrigElement rescale_indices(const Rational& factor) const;
  Integer index_denominator_lcm() const;
  bool has_polynomial_coeffs() const;

  // Laplace image: sum c_a(z) cosh(a*ell*w) + s_a(z) sinh(a*ell*w)/w with
  // w = sqrt(sigma(z)); even in w, hence branch independent.  At sigma(z) = 0
  // the limits cosh -> 1 and sinh(x w)/w -> x apply.
  std::complex<double> laplace_eval(const std::complex<double>& z) const;

  std::string str() const;

  // In-place accumulation used by the builders below and by mul; keeps the
  // normal form (folding and zero removal).
  void accumulate(TrigKind kind, Rational alpha, const RatFun& coeff);

 private:
  void check_tag(const TrigElement& o) const;

  RingTag tag_;
  std::map<Rational, TrigPair> terms_;
};

// Single term with index folding; kind S at index 0 yields zero.
TrigElement make_term(const RingTag& tag, TrigKind kind, const Rational& alpha,
                      const RatFun& coeff);
TrigElement make_term(const RingTag& tag, TrigKind kind, const Rational& alpha,
                      const Rational& coeff);

// True iff the element is a nonzero constant of the coefficient field (the
// units of the ring that exist in every configuration).
bool is_unit(const TrigElement& p);

// Transform-side values of the length-scaled basis symbols at one frequency
// point: (cosh(alpha*ell*w), sinh(alpha*ell*w)/w) with w = sqrt(sigma(z)).
// Both are even in w, so the branch of the square root is immaterial.
std::pair<std::complex<double>, std::complex<double>> basis_values(
    const RingTag& tag, const Rational& alpha, const std::complex<double>& z);

// Exact quotient x with d*x = p, or nullopt when no such x exists.
// Irreducible configurations use a candidate index grid bounded by
// norm(p) - norm(d) (sound there since the norm is additive); configurations
// with sqrt(sigma) in the field divide through the Laurent image, where the
// grid bound does not apply.  The result is verified by re-multiplication.
std::optional<TrigElement> exact_div(const TrigElement& p, const TrigElement& d);

}  // namespace operant
