#pragma once

#include "operant/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace operant {

// The base variable of the coefficient field.  Elements over different base
// variables never mix; every operation checks the tag.
enum class Var { s, sigma };

std::string var_name(Var v);
Var parse_var(const std::string& name);

// Dense univariate polynomial with exact rational coefficients.
// Invariant: no trailing zero coefficients (the zero polynomial has an empty
// coefficient vector).
class Poly {
 public:
  explicit Poly(Var var) : var_(var) {}
  Poly(Var var, std::vector<Rational> coeffs);

  static Poly zero(Var var) { return Poly(var); }
  static Poly constant(Var var, const Rational& value);
  // The base variable itself.
  static Poly variable(Var var);
  // c1*x + c0
  static Poly linear(Var var, const Rational& c1, const Rational& c0);

  Var var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Rational constant_value() const;  // requires is_constant()
  const Rational& leading() const;  // requires !is_zero()
  Rational coeff(int k) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& k) const;
  bool operator==(const Poly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division over the rational field; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly derivative() const;
  Poly monic() const;  // requires !is_zero()
  Poly pow(unsigned n) const;

  std::complex<double> eval(const std::complex<double>& z) const;
  double coeff_scale(const std::complex<double>& z) const;  // sum |c_i| max(1,|z|)^i

  std::string str() const;

 private:
  void trim();
  void check_tag(const Poly& o) const;

  Var var_;
  std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly poly_lcm(const Poly& p, const Poly& q);

}  // namespace operant
