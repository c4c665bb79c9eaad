#include "operant/ratfun.hpp"

#include "operant/errors.hpp"

#include <cmath>

namespace operant {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.var() != den_.var())
    throw TagMismatchError("rational function with mixed base variables");
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.var(), 1);
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv_lead = Rational(1) / lead;
    num_ = num_ * inv_lead;
    den_ = den_ * inv_lead;
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw PreconditionError("constant_value on non-constant rational function");
  return num_.constant_value() / den_.constant_value();
}

void RatFun::check_tag(const RatFun& o) const {
  if (var() != o.var())
    throw TagMismatchError("rational function base variables differ: " + var_name(var()) +
                           " vs " + var_name(o.var()));
}

RatFun RatFun::operator-() const {
  RatFun r(var());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

namespace {

// Exact quotient by a monic divisor already known to divide evenly.
Poly exact_quot(const Poly& a, const Poly& g) {
  return g.degree() > 0 ? a.divmod(g).first : a;
}

}  // namespace

// The sum and product below keep every gcd call on operands no larger than
// the inputs themselves (never on the cross products), which is what keeps
// long euclidean chains over the scalar field affordable.

RatFun RatFun::operator+(const RatFun& o) const {
  check_tag(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const Poly g = poly_gcd(den_, o.den_);
  const Poly d1 = exact_quot(den_, g);
  const Poly d2 = exact_quot(o.den_, g);
  Poly t = num_ * d2 + o.num_ * d1;
  if (t.is_zero()) return RatFun(var());
  RatFun r(var());
  if (g.degree() > 0) {
    const Poly g2 = poly_gcd(t, g);
    r.num_ = exact_quot(t, g2);
    r.den_ = exact_quot(g, g2) * d1 * d2;
  } else {
    // Coprime denominators: t is automatically coprime to d1 * d2.
    r.num_ = std::move(t);
    r.den_ = d1 * d2;
  }
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  check_tag(o);
  if (is_zero() || o.is_zero()) return RatFun(var());
  RatFun r(var());
  if (is_constant()) {
    r.num_ = o.num_ * constant_value();
    r.den_ = o.den_;
    return r;
  }
  if (o.is_constant()) {
    r.num_ = num_ * o.constant_value();
    r.den_ = den_;
    return r;
  }
  const Poly g1 = poly_gcd(num_, o.den_);
  const Poly g2 = poly_gcd(o.num_, den_);
  r.num_ = exact_quot(num_, g1) * exact_quot(o.num_, g2);
  r.den_ = exact_quot(den_, g2) * exact_quot(o.den_, g1);
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const {
  check_tag(o);
  if (o.is_zero()) throw PreconditionError("division by zero rational function");
  return *this * o.inv();
}

RatFun RatFun::inv() const {
  if (is_zero()) throw PreconditionError("inverse of zero rational function");
  RatFun r(var());
  const Rational lead = num_.leading();
  if (lead == 1) {
    r.num_ = den_;
    r.den_ = num_;
  } else {
    const Rational il = Rational(1) / lead;
    r.num_ = den_ * il;
    r.den_ = num_ * il;
  }
  return r;
}

std::complex<double> RatFun::eval(const std::complex<double>& z) const {
  const std::complex<double> d = den_.eval(z);
  const double scale = std::max(1.0, den_.coeff_scale(z));
  if (std::abs(d) < 1e-12 * scale)
    throw PoleError("rational function evaluated at a pole (den " + den_.str() + ")");
  return num_.eval(z) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun operator*(const Rational& k, const RatFun& f) {
  return RatFun::constant(f.var(), k) * f;
}

}  // namespace operant
