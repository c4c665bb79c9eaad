#pragma once

#include "operant/ratfun.hpp"

#include <complex>
#include <optional>
#include <string>

namespace operant {

// The coupling parameter of the ring: either the base indeterminate itself
// (coefficients live in Q(sigma)) or the polynomial a*s^2 + b*s + c over the
// Laplace variable s (coefficients live in Q(s)).  Requires sigma != 0 and,
// in polynomial mode, a >= 0.
class SigmaSpec {
 public:
  static SigmaSpec indeterminate();
  static SigmaSpec polynomial(const Rational& a, const Rational& b, const Rational& c);

  bool is_indeterminate() const { return indeterminate_; }
  Var var() const { return indeterminate_ ? Var::sigma : Var::s; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  // sigma as an element of the coefficient field.
  RatFun as_ratfun() const;
  Poly as_poly() const;

  // sigma(z): identity in indeterminate mode, a z^2 + b z + c otherwise.
  std::complex<double> eval(const std::complex<double>& z) const;

  bool operator==(const SigmaSpec& o) const;
  bool operator!=(const SigmaSpec& o) const { return !(*this == o); }

  std::string str() const;

 private:
  SigmaSpec() = default;
  bool indeterminate_ = false;
  Rational a_{0}, b_{0}, c_{0};
};

// The square root of sigma inside the exact coefficient field, when it exists:
//  - indeterminate mode: never;
//  - polynomial mode with a > 0: requires b^2 = 4ac and rational sqrt(a),
//    giving sqrt(a)*s + b/(2*sqrt(a));
//  - a = 0, b = 0: requires c to be a rational square, giving sqrt(c).
// A missing root selects the parity-subset division engine downstream.
std::optional<RatFun> sqrt_sigma(const SigmaSpec& sigma);

}  // namespace operant
