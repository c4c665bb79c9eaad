#include "operant/lift.hpp"

#include "operant/errors.hpp"
#include "operant/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace operant {

LiftedScalar LiftedScalar::from_ratfun(const RatFun& f) {
  LiftedScalar r(f.var());
  if (!f.is_zero()) r.parts.emplace_back(std::complex<double>{1.0, 0.0}, f);
  return r;
}

void LiftedScalar::add_part(const std::complex<double>& scale, const RatFun& base) {
  if (scale == std::complex<double>{0.0, 0.0} || base.is_zero()) return;
  parts.emplace_back(scale, base);
}

LiftedScalar LiftedScalar::operator+(const LiftedScalar& o) const {
  LiftedScalar r = *this;
  r.parts.insert(r.parts.end(), o.parts.begin(), o.parts.end());
  r.compact();
  return r;
}

LiftedScalar LiftedScalar::scaled(const std::complex<double>& w) const {
  LiftedScalar r(var);
  for (const auto& [sc, base] : parts) r.add_part(sc * w, base);
  return r;
}

std::complex<double> LiftedScalar::eval(const std::complex<double>& z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [sc, base] : parts) acc += sc * base.eval(z);
  return acc;
}

void LiftedScalar::compact() {
  std::vector<std::pair<std::complex<double>, RatFun>> merged;
  for (const auto& [sc, base] : parts) {
    bool hit = false;
    for (auto& [msc, mbase] : merged)
      if (mbase == base) {
        msc += sc;
        hit = true;
        break;
      }
    if (!hit) merged.emplace_back(sc, base);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) {
                                return p.first == std::complex<double>{0.0, 0.0};
                              }),
               merged.end());
  parts = std::move(merged);
}

LiftedElement LiftedElement::from_trig(const TrigElement& e) {
  LiftedElement r(e.tag());
  for (const auto& [alpha, pair] : e.terms()) {
    LiftedPair lp(e.tag().sigma.var());
    lp.c = LiftedScalar::from_ratfun(pair.c);
    lp.s = LiftedScalar::from_ratfun(pair.s);
    r.terms_.emplace(alpha, std::move(lp));
  }
  return r;
}

void LiftedElement::add_scaled_trig(const TrigElement& y, const std::complex<double>& w) {
  if (y.tag() != tag_) throw PreconditionError("lifted add: mixed ring tags");
  const Var v = tag_.sigma.var();

  // Expand prod (s - p_j) as a complex-coefficient polynomial in s.
  std::vector<std::complex<double>> den{{1.0, 0.0}};
  for (const auto& p : poles_) {
    std::vector<std::complex<double>> next(den.size() + 1, {0.0, 0.0});
    for (size_t i = 0; i < den.size(); ++i) {
      next[i] -= p * den[i];
      next[i + 1] += den[i];
    }
    den = std::move(next);
  }
  std::vector<RatFun> powers;
  powers.push_back(RatFun::constant(v, 1));
  for (size_t k = 1; k < den.size(); ++k)
    powers.push_back(powers.back() * RatFun::variable(v));

  for (const auto& [alpha, pair] : y.terms()) {
    auto it = terms_.find(alpha);
    if (it == terms_.end()) it = terms_.emplace(alpha, LiftedPair(v)).first;
    for (size_t k = 0; k < den.size(); ++k) {
      const std::complex<double> sc = w * den[k];
      if (!pair.c.is_zero()) it->second.c.add_part(sc, pair.c * powers[k]);
      if (!pair.s.is_zero()) it->second.s.add_part(sc, pair.s * powers[k]);
    }
    it->second.c.compact();
    it->second.s.compact();
  }
}

void LiftedElement::scale(const std::complex<double>& w) {
  for (auto& [alpha, pair] : terms_) {
    pair.c = pair.c.scaled(w);
    pair.s = pair.s.scaled(w);
  }
}

std::complex<double> LiftedElement::eval_numerator(const std::complex<double>& z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [alpha, pair] : terms_) {
    const auto [cb, sb] = basis_values(tag_, alpha, z);
    if (!pair.c.is_empty()) acc += pair.c.eval(z) * cb;
    if (!pair.s.is_empty()) acc += pair.s.eval(z) * sb;
  }
  return acc;
}

std::complex<double> LiftedElement::denominator(const std::complex<double>& z) const {
  std::complex<double> acc{1.0, 0.0};
  for (const auto& p : poles_) acc *= z - p;
  return acc;
}

std::complex<double> LiftedElement::eval_direct(const std::complex<double>& z) const {
  return eval_numerator(z) / denominator(z);
}

std::complex<double> LiftedElement::eval_regularized(const std::complex<double>& z) const {
  // Mean over a small circle; exact for analytic functions, so the declared
  // removable points inside the circle do not bias the value.  The radius is
  // chosen so no sample point sits close to a removable point.
  const double base = 1e-2 * (1.0 + std::abs(z));
  double radius = base;
  for (const double mult : {1.0, 2.3, 5.1, 11.0}) {
    radius = base * mult;
    bool clear = true;
    for (const auto& p : poles_) {
      const double d = std::abs(z - p);
      if (d > 0.35 * radius && d < 1.65 * radius) {
        clear = false;
        break;
      }
    }
    if (clear) break;
  }
  constexpr int n = 16;
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n + 0.318;
    const std::complex<double> zj = z + radius * std::polar(1.0, theta);
    acc += eval_direct(zj);
  }
  return acc / static_cast<double>(n);
}

std::complex<double> LiftedElement::eval(const std::complex<double>& z) const {
  const double near = 1e-3 * (1.0 + std::abs(z));
  for (const auto& p : poles_)
    if (std::abs(z - p) < near) return eval_regularized(z);
  return eval_direct(z);
}

double pole_residual(const LiftedElement& e, const std::complex<double>& at, double radius,
                     int order) {
  constexpr int n = 16;
  std::vector<std::complex<double>> vals(n);
  std::vector<double> thetas(n);
  for (int j = 0; j < n; ++j) {
    thetas[j] = 2.0 * std::numbers::pi * j / n + 0.173;
    vals[j] = e.eval_direct(at + radius * std::polar(1.0, thetas[j]));
  }
  double total = 0.0;
  double rk = 1.0;
  for (int k = 1; k <= order; ++k) {
    rk *= radius;
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) acc += vals[j] * std::polar(1.0, k * thetas[j]);
    total += std::abs(acc) * rk / n;
  }
  return total;
}

void coprime_step(LiftedElement& a, LiftedElement& b, const TrigElement& pt,
                  const TrigElement& qt, const std::complex<double>& at, double tol) {
  const std::complex<double> pbar = pt.laplace_eval(at);
  const std::complex<double> qbar = qt.laplace_eval(at);
  const std::complex<double> probe = at + std::complex<double>{0.83, 0.47};
  const double ref = std::max(
      {1.0, std::abs(pt.laplace_eval(probe)), std::abs(qt.laplace_eval(probe))});
  if (std::max(std::abs(pbar), std::abs(qbar)) < tol * ref)
    throw DegenerateRootError("both quotients vanish at a declared point");

  if (std::abs(qbar) >= std::abs(pbar)) {
    const std::complex<double> mu = a.eval(at) / qbar;
    a.add_scaled_trig(qt, -mu);
    b.add_scaled_trig(pt, mu);
  } else {
    const std::complex<double> nu = b.eval(at) / pbar;
    b.add_scaled_trig(pt, -nu);
    a.add_scaled_trig(qt, nu);
  }
  a.declare_removable(at);
  b.declare_removable(at);
}

namespace {

Poly denominator_lcm(const TrigElement& e) {
  Poly acc = Poly::constant(e.tag().sigma.var(), 1);
  for (const auto& [alpha, pair] : e.terms()) {
    (void)alpha;
    if (!pair.c.is_zero()) acc = poly_lcm(acc, pair.c.den());
    if (!pair.s.is_zero()) acc = poly_lcm(acc, pair.s.den());
  }
  return acc;
}

// Replace numerically split multiple roots by their cluster mean.
std::vector<std::complex<double>> cluster_roots(std::vector<std::complex<double>> roots) {
  std::vector<std::complex<double>> out;
  size_t i = 0;
  while (i < roots.size()) {
    size_t j = i + 1;
    std::complex<double> sum = roots[i];
    const double tol = 1e-6 * (1.0 + std::abs(roots[i]));
    while (j < roots.size() && std::abs(roots[j] - roots[i]) < tol) {
      sum += roots[j];
      ++j;
    }
    const std::complex<double> mean = sum / static_cast<double>(j - i);
    for (size_t k = i; k < j; ++k) out.push_back(mean);
    i = j;
  }
  return out;
}

}  // namespace

LiftCertificate bezout_lift(const TrigElement& p1, const TrigElement& p2,
                            const LiftOptions& opt) {
  if (p1.tag() != p2.tag()) throw PreconditionError("bezout_lift: mixed ring tags");
  const RingTag& tag = p1.tag();
  const Var v = tag.sigma.var();

  BezoutCertificate base = gcd_pair(p1, p2);
  const TrigElement& g = base.g;

  Poly d0 = poly_lcm(poly_lcm(denominator_lcm(base.cofactor_a), denominator_lcm(base.cofactor_b)),
                     denominator_lcm(g));
  const RatFun d0f = RatFun::from_poly(d0);

  TrigElement A = base.cofactor_a * d0f;
  TrigElement B = base.cofactor_b * d0f;
  TrigElement c = g * d0f;

  auto q1 = exact_div(p1, g);
  auto q2 = exact_div(p2, g);
  if (!q1 || !q2) throw NumericError("division by the computed gcd is not exact");

  const TrigElement e1 = *q1 * d0f.inv();
  const TrigElement e2 = *q2 * d0f.inv();
  const Poly d1 = denominator_lcm(e1);
  const Poly d2 = denominator_lcm(e2);
  const TrigElement n1 = e1 * RatFun::from_poly(d1);
  const TrigElement n2 = e2 * RatFun::from_poly(d2);

  const Poly gd = poly_gcd(d1, d2);
  const Poly h = poly_lcm(d1, d2);
  const TrigElement pt = n1 * RatFun::from_poly(d2.divmod(gd).first);
  const TrigElement qt = n2 * RatFun::from_poly(d1.divmod(gd).first);

  const RatFun hinv = RatFun(Poly::constant(v, 1), h);
  if (A * pt + B * qt != TrigElement::scalar(tag, RatFun::from_poly(h)))
    throw NumericError("lift bookkeeping: cleared identity mismatch");
  TrigElement ctil = c * hinv;
  if (pt * ctil != p1 || qt * ctil != p2)
    throw NumericError("lift bookkeeping: factorization mismatch");

  LiftedElement a = LiftedElement::from_trig(A);
  LiftedElement b = LiftedElement::from_trig(B);
  std::vector<std::complex<double>> roots =
      h.degree() > 0 ? cluster_roots(find_roots(h)) : std::vector<std::complex<double>>{};
  for (const auto& r : roots) coprime_step(a, b, pt, qt, r, opt.degenerate_tol);

  // When the right-hand side is a nonzero rational constant, fold it into the
  // cofactors so the identity ends at 1.
  if (!ctil.is_zero() && ctil.norm() == Rational(0)) {
    const RatFun k = ctil.constant_part();
    if (k.is_constant() && ctil == TrigElement::scalar(tag, k)) {
      const double kd = to_double(k.constant_value());
      a.scale(1.0 / kd);
      b.scale(1.0 / kd);
      ctil = TrigElement::one(tag);
    }
  }

  return LiftCertificate{std::move(a), std::move(b), std::move(ctil), pt, qt, h,
                         std::move(roots), std::move(base)};
}

double lift_residual(const LiftCertificate& cert, const TrigElement& p1, const TrigElement& p2,
                     const std::complex<double>& z) {
  const std::complex<double> lhs =
      cert.a.eval(z) * p1.laplace_eval(z) + cert.b.eval(z) * p2.laplace_eval(z);
  return std::abs(lhs - cert.c.laplace_eval(z));
}

}  // namespace operant
