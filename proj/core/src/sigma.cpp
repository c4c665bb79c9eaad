#include "operant/sigma.hpp"

#include "operant/errors.hpp"

namespace operant {

SigmaSpec SigmaSpec::indeterminate() {
  SigmaSpec s;
  s.indeterminate_ = true;
  return s;
}

SigmaSpec SigmaSpec::polynomial(const Rational& a, const Rational& b, const Rational& c) {
  if (a < 0) throw PreconditionError("sigma polynomial requires a >= 0");
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("sigma must be nonzero");
  SigmaSpec s;
  s.a_ = a;
  s.b_ = b;
  s.c_ = c;
  return s;
}

RatFun SigmaSpec::as_ratfun() const { return RatFun::from_poly(as_poly()); }

Poly SigmaSpec::as_poly() const {
  if (indeterminate_) return Poly::variable(Var::sigma);
  return Poly(Var::s, {c_, b_, a_});
}

std::complex<double> SigmaSpec::eval(const std::complex<double>& z) const {
  if (indeterminate_) return z;
  return (to_double(a_) * z + to_double(b_)) * z + to_double(c_);
}

bool SigmaSpec::operator==(const SigmaSpec& o) const {
  return indeterminate_ == o.indeterminate_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

std::string SigmaSpec::str() const {
  if (indeterminate_) return "sigma";
  return as_poly().str();
}

std::optional<RatFun> sqrt_sigma(const SigmaSpec& sigma) {
  if (sigma.is_indeterminate()) return std::nullopt;
  const Rational &a = sigma.a(), &b = sigma.b(), &c = sigma.c();
  if (a > 0) {
    if (b * b != 4 * a * c) return std::nullopt;
    const auto ra = rational_sqrt(a);
    if (!ra) return std::nullopt;
    return RatFun::from_poly(Poly::linear(Var::s, *ra, b / (2 * *ra)));
  }
  if (b != 0) return std::nullopt;  // odd degree, never a square
  const auto rc = rational_sqrt(c);
  if (!rc) return std::nullopt;
  return RatFun::constant(Var::s, *rc);
}

}  // namespace operant
