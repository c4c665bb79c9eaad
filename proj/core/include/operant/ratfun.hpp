#pragma once

#include "operant/poly.hpp"

#include <complex>
#include <string>

namespace operant {

// Exact rational function num/den over the base variable.
// Canonical form: gcd(num, den) = 1, den monic, zero represented as 0/1.
class RatFun {
 public:
  explicit RatFun(Var var) : num_(var), den_(Poly::constant(var, 1)) {}
  RatFun(Poly num, Poly den);  // canonicalizes; den must be nonzero

  static RatFun zero(Var var) { return RatFun(var); }
  static RatFun constant(Var var, const Rational& value) {
    return RatFun(Poly::constant(var, value), Poly::constant(var, 1));
  }
  static RatFun from_poly(const Poly& p) { return RatFun(p, Poly::constant(p.var(), 1)); }
  static RatFun variable(Var var) { return from_poly(Poly::variable(var)); }

  Var var() const { return num_.var(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  bool is_polynomial() const { return den_.is_constant(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;  // o must be nonzero
  RatFun inv() const;                       // requires nonzero
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Throws PoleError when |den(z)| falls below a scale-relative threshold.
  std::complex<double> eval(const std::complex<double>& z) const;

  std::string str() const;

 private:
  void check_tag(const RatFun& o) const;

  Poly num_;
  Poly den_;
};

RatFun operator*(const Rational& k, const RatFun& f);

}  // namespace operant
