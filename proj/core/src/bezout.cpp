#include "operant/bezout.hpp"

#include "operant/errors.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace operant {

namespace {

Rational norm_of(const TrigElement& e) {
  auto n = e.norm();
  if (!n) throw PreconditionError("norm of zero element requested");
  return *n;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace

RingMat2 RingMat2::identity(const RingTag& tag) {
  return RingMat2{TrigElement::one(tag), TrigElement::zero(tag), TrigElement::zero(tag),
                  TrigElement::one(tag)};
}

RingMat2 RingMat2::swap_rows(const RingTag& tag) {
  return RingMat2{TrigElement::zero(tag), TrigElement::one(tag), TrigElement::one(tag),
                  TrigElement::zero(tag)};
}

RingMat2 RingMat2::operator*(const RingMat2& o) const {
  return RingMat2{m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                  m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

std::pair<TrigElement, TrigElement> RingMat2::apply(const TrigElement& p,
                                                    const TrigElement& q) const {
  return {m00 * p + m01 * q, m10 * p + m11 * q};
}

TrigElement RingMat2::det() const { return m00 * m11 - m01 * m10; }

RingMat2 RingMat2::rescale_indices(const Rational& factor) const {
  return RingMat2{m00.rescale_indices(factor), m01.rescale_indices(factor),
                  m10.rescale_indices(factor), m11.rescale_indices(factor)};
}

bool in_parity_subset(const TrigElement& e) {
  bool first = true;
  Integer parity = 0;
  for (const auto& [alpha, pair] : e.terms()) {
    if (!is_integer(alpha)) return false;
    const Integer v = boost::multiprecision::numerator(alpha) % 2;
    if (first) {
      parity = v;
      first = false;
    } else if (v != parity) {
      return false;
    }
  }
  return true;
}

namespace {

// Ordered pair + transform for a single norm-gap elimination.
struct GapStep {
  TrigElement pbar, qbar;
  RingMat2 m;
};

// pre: norm(p) > norm(q) > 0.  Solves the 2x2 leading system for the single
// quotient term h and kills the top index of p.
GapStep gap_eliminate(const TrigElement& p, const TrigElement& q) {
  const RingTag& tag = p.tag();
  const Var v = tag.sigma.var();
  const Rational np = norm_of(p), nq = norm_of(q);
  const TrigPair lp = p.leading_pair(), lq = q.leading_pair();
  const RatFun sigma = tag.sigma.as_ratfun();

  const RatFun det = lq.c * lq.c - lq.s * lq.s / sigma;
  if (det.is_zero())
    throw PreconditionError(
        "singular leading system: sqrt(sigma) exists in the scalar field; use the Laurent "
        "engine");
  const RatFun two = RatFun::constant(v, 2);
  const RatFun ah = (two * (lp.c * lq.c - lp.s * lq.s / sigma)) / det;
  const RatFun bh = (two * (lp.s * lq.c - lp.c * lq.s)) / det;

  const Rational delta = np - nq;
  TrigElement h = make_term(tag, TrigKind::C, delta, ah) + make_term(tag, TrigKind::S, delta, bh);
  TrigElement r = p - h * q;
  assert(r.is_zero() || norm_of(r) < np);

  const TrigElement one = TrigElement::one(tag), zero = TrigElement::zero(tag);
  if (!r.is_zero() && norm_of(r) > norm_of(q))
    return GapStep{r, q, RingMat2{one, -h, zero, one}};
  return GapStep{q, r, RingMat2{zero, one, one, -h}};
}

}  // namespace

DivisionStepResult division_step(const TrigElement& p, const TrigElement& q) {
  if (p.tag() != q.tag()) throw TagMismatchError("division_step: mixed ring tags");
  if (!in_parity_subset(p) || !in_parity_subset(q))
    throw PreconditionError("division_step: operands must lie in the parity subset");
  if (p.is_zero() || q.is_zero()) throw PreconditionError("division_step: zero operand");
  const Rational np = norm_of(p), nq = norm_of(q);
  if (np < nq || nq <= 0)
    throw PreconditionError("division_step: requires norm(p) >= norm(q) > 0");

  const RingTag& tag = p.tag();
  const TrigElement one = TrigElement::one(tag), zero = TrigElement::zero(tag);

  if (np > nq) {
    GapStep s = gap_eliminate(p, q);
    return DivisionStepResult{s.pbar, s.qbar, s.m, 1};
  }

  const TrigPair lp = p.leading_pair(), lq = q.leading_pair();
  const RatFun cross = lp.c * lq.s - lp.s * lq.c;

  if (cross.is_zero()) {
    // Proportional leading pairs: subtract the multiple, then finish with a
    // norm-gap elimination (or clear out p entirely if a unit remains).
    const RatFun c = lp.c.is_zero() ? lq.s / lp.s : lq.c / lp.c;
    const TrigElement celt = TrigElement::scalar(tag, c);
    const RingMat2 m2{one, zero, -celt, one};
    TrigElement q2 = q - p * c;
    if (q2.is_zero()) return DivisionStepResult{p, q2, m2, 2};
    if (norm_of(q2) == 0) {
      const TrigElement h = p * q2.constant_part().inv();
      const RingMat2 m3{zero, one, one, -h};
      return DivisionStepResult{q2, zero, m3 * m2, 2};
    }
    GapStep s = gap_eliminate(p, q2);
    return DivisionStepResult{s.pbar, s.qbar, s.m * m2, 2};
  }

  // Independent leading pairs: divide out the leading matrix, then pull both
  // norms down one index with the inverse rotation block (determinant 1 by
  // the C^2 - sigma S^2 identity).
  const TrigElement a00 = TrigElement::scalar(tag, lq.s / cross);
  const TrigElement a01 = TrigElement::scalar(tag, -(lp.s / cross));
  const TrigElement a10 = TrigElement::scalar(tag, -(lq.c / cross));
  const TrigElement a11 = TrigElement::scalar(tag, lp.c / cross);
  const RingMat2 a1inv{a00, a01, a10, a11};

  const RatFun sigma = tag.sigma.as_ratfun();
  const TrigElement c1 = make_term(tag, TrigKind::C, 1, Rational(1));
  const TrigElement s1 = make_term(tag, TrigKind::S, 1, Rational(1));
  const RingMat2 a2inv{c1, -(s1 * sigma), -s1, c1};

  RingMat2 m = a2inv * a1inv;
  auto [pbar, qbar] = m.apply(p, q);
  assert(!(pbar.is_zero() && qbar.is_zero()));

  bool swap = false;
  if (pbar.is_zero())
    swap = true;
  else if (!qbar.is_zero() && norm_of(pbar) < norm_of(qbar))
    swap = true;
  if (swap) {
    std::swap(pbar, qbar);
    m = RingMat2::swap_rows(tag) * m;
  }
  assert(norm_of(pbar) < np);
  return DivisionStepResult{pbar, qbar, m, 3};
}

std::pair<TrigElement, RatFun> normalize_leading(const TrigElement& g) {
  const Var v = g.tag().sigma.var();
  if (g.is_zero()) return {g, RatFun::constant(v, 1)};
  const TrigPair lead = g.leading_pair();
  const RatFun u = lead.c.is_zero() ? lead.s : lead.c;
  return {g * u.inv(), u};
}

namespace {

BezoutCertificate single_generator(const TrigElement& x, bool x_is_first) {
  const RingTag& tag = x.tag();
  auto [g, u] = normalize_leading(x);
  const TrigElement zero = TrigElement::zero(tag);
  const TrigElement uinv = TrigElement::scalar(tag, u.inv());
  BezoutCertificate cert{g, zero, zero, {}};
  if (x_is_first) {
    cert.cofactor_a = uinv;
    cert.trail.push_back(RingMat2{uinv, zero, zero, TrigElement::one(tag)});
  } else {
    cert.cofactor_b = uinv;
    cert.trail.push_back(RingMat2{zero, uinv, TrigElement::one(tag), zero});
  }
  return cert;
}

// Division chain to exhaustion inside the parity subset; inputs already
// rescaled so that every index is an even integer.
BezoutCertificate subset_chain(TrigElement p, TrigElement q) {
  const RingTag& tag = p.tag();
  std::vector<RingMat2> trail;
  RingMat2 m = RingMat2::identity(tag);
  if (norm_of(p) < norm_of(q)) {
    m = RingMat2::swap_rows(tag);
    trail.push_back(m);
    std::swap(p, q);
  }
  while (!q.is_zero() && norm_of(q) > 0) {
    DivisionStepResult step = division_step(p, q);
    trail.push_back(step.transform);
    m = step.transform * m;
    p = step.pbar;
    q = step.qbar;
    // Unit row scalings pin the leading coefficients back to 1 after every
    // step; otherwise each elimination compounds the previous quotients'
    // denominators and the coefficient degrees square along the chain.
    auto [pn, pu] = normalize_leading(p);
    auto [qn, qu] = normalize_leading(q);
    if (!pu.is_constant() || !qu.is_constant()) {
      const RingMat2 d{TrigElement::scalar(tag, pu.inv()), TrigElement::zero(tag),
                       TrigElement::zero(tag), TrigElement::scalar(tag, qu.inv())};
      trail.push_back(d);
      m = d * m;
      p = std::move(pn);
      q = std::move(qn);
    }
  }
  if (!q.is_zero()) {
    // Unit remainder: the ideal is everything; clear the other slot.
    const TrigElement h = p * q.constant_part().inv();
    const RingMat2 el{TrigElement::zero(tag), TrigElement::one(tag), TrigElement::one(tag), -h};
    trail.push_back(el);
    m = el * m;
    p = q;
    q = TrigElement::zero(tag);
  }
  auto [g, u] = normalize_leading(p);
  const RingMat2 nm{TrigElement::scalar(tag, u.inv()), TrigElement::zero(tag),
                    TrigElement::zero(tag), TrigElement::one(tag)};
  trail.push_back(nm);
  m = nm * m;
  return BezoutCertificate{g, m.m00, m.m01, std::move(trail)};
}

}  // namespace

BezoutCertificate gcd_pair(const TrigElement& p, const TrigElement& q) {
  if (p.tag() != q.tag()) throw TagMismatchError("gcd_pair: mixed ring tags");
  if (p.is_zero() && q.is_zero()) {
    // gcd of the zero ideal is zero, certified by the empty trail.
    const TrigElement zero = TrigElement::zero(p.tag());
    return BezoutCertificate{zero, zero, zero, {}};
  }
  if (q.is_zero()) return single_generator(p, true);
  if (p.is_zero()) return single_generator(q, false);

  const RingTag& tag = p.tag();
  const auto lambda = sqrt_sigma(tag.sigma);

  const Integer d =
      boost::multiprecision::lcm(p.index_denominator_lcm(), q.index_denominator_lcm());
  const Rational factor = lambda ? Rational(d) : Rational(2 * d);
  const Rational inv_factor = Rational(1) / factor;

  const TrigElement ps = p.rescale_indices(factor);
  const TrigElement qs = q.rescale_indices(factor);

  BezoutCertificate cert =
      lambda ? laurent_gcd(to_laurent(ps, *lambda), to_laurent(qs, *lambda), tag, *lambda)
             : subset_chain(ps, qs);

  cert.g = cert.g.rescale_indices(inv_factor);
  cert.cofactor_a = cert.cofactor_a.rescale_indices(inv_factor);
  cert.cofactor_b = cert.cofactor_b.rescale_indices(inv_factor);
  for (auto& t : cert.trail) t = t.rescale_indices(inv_factor);
  return cert;
}

namespace {

using Vec = std::vector<RatFun>;

void vec_trim(Vec& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool vec_zero(const Vec& a) { return a.empty(); }

Vec vec_sub_scaled(const Vec& a, const Vec& b, const RatFun& f, size_t shift) {
  Vec r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, RatFun::zero(f.var()));
  for (size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - f * b[i];
  vec_trim(r);
  return r;
}

// Long division over the scalar field: a = quot * b + rem.
std::pair<Vec, Vec> vec_divmod(Vec a, const Vec& b, Var v) {
  if (vec_zero(b)) throw PreconditionError("polynomial division by zero");
  Vec quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, RatFun::zero(v));
  while (!vec_zero(a) && a.size() >= b.size()) {
    const RatFun f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    quot[shift] = quot[shift] + f;
    a = vec_sub_scaled(a, b, f, shift);
  }
  vec_trim(quot);
  return {quot, a};
}

Vec vec_sub_mul(const Vec& a, const Vec& q, const Vec& b, Var v) {
  // a - q * b
  Vec prod(q.empty() || b.empty() ? 0 : q.size() + b.size() - 1, RatFun::zero(v));
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = prod[i + j] + q[i] * b[j];
  Vec r = a;
  if (r.size() < prod.size()) r.resize(prod.size(), RatFun::zero(v));
  for (size_t i = 0; i < prod.size(); ++i) r[i] = r[i] - prod[i];
  vec_trim(r);
  return r;
}

Vec vec_of(const LaurentPoly& L) {
  Vec r;
  if (L.is_zero()) return r;
  if (L.min_exp() < 0) throw PreconditionError("negative exponent in polynomial part");
  r.resize(static_cast<size_t>(L.max_exp()) + 1, RatFun::zero(L.var));
  for (const auto& [e, k] : L.c) r[static_cast<size_t>(e)] = k;
  return r;
}

LaurentPoly vec_to_laurent(const Vec& a, Var v) {
  LaurentPoly L(v);
  for (size_t i = 0; i < a.size(); ++i) L.add(static_cast<long>(i), a[i]);
  return L;
}

LaurentPoly monomial(Var v, long e) {
  LaurentPoly L(v);
  L.add(e, RatFun::constant(v, 1));
  return L;
}

}  // namespace

BezoutCertificate laurent_gcd(const LaurentPoly& p, const LaurentPoly& q, const RingTag& tag,
                              const RatFun& lambda) {
  const Var v = tag.sigma.var();
  const TrigElement zero = TrigElement::zero(tag), one = TrigElement::one(tag);
  auto back = [&](const LaurentPoly& L) { return from_laurent(L, tag, lambda); };

  if (p.is_zero() && q.is_zero()) throw PreconditionError("laurent_gcd: zero ideal");
  if (p.is_zero() || q.is_zero()) {
    const LaurentPoly& x = p.is_zero() ? q : p;
    const long t = x.min_exp();
    // x * z^{-t} has a nonzero constant term; normalize its top coefficient.
    LaurentPoly shifted = x.shifted(-t);
    const RatFun u = shifted.c.at(shifted.max_exp());
    LaurentPoly cof(v);
    cof.add(-t, u.inv());
    LaurentPoly g = shifted;
    for (auto& [e, k] : g.c) k = k / u;
    BezoutCertificate cert{back(g), zero, zero, {}};
    if (p.is_zero()) {
      cert.cofactor_b = back(cof);
      cert.trail.push_back(RingMat2{zero, back(cof), one, zero});
    } else {
      cert.cofactor_a = back(cof);
      cert.trail.push_back(RingMat2{back(cof), zero, zero, one});
    }
    return cert;
  }

  const long sp = p.min_exp(), sq = q.min_exp();
  std::vector<RingMat2> trail;
  trail.push_back(RingMat2{back(monomial(v, -sp)), zero, zero, back(monomial(v, -sq))});

  Vec r0 = vec_of(p.shifted(-sp));
  Vec r1 = vec_of(q.shifted(-sq));
  Vec s0{RatFun::constant(v, 1)}, t0;
  Vec s1, t1{RatFun::constant(v, 1)};

  while (!vec_zero(r1)) {
    auto [h, rem] = vec_divmod(r0, r1, v);
    Vec s2 = vec_sub_mul(s0, h, s1, v);
    Vec t2 = vec_sub_mul(t0, h, t1, v);
    const TrigElement ht = back(vec_to_laurent(h, v));
    if (rem.empty()) {
      trail.push_back(RingMat2{zero, one, one, -ht});
    } else {
      // Keep the chain monic: scaling each remainder row by the inverse of
      // its top coefficient pins every later quotient to the subresultant
      // degree bound; without it the coefficient degrees square per step.
      const RatFun c = rem.back().inv();
      for (auto& f : rem) f = f * c;
      for (auto& f : s2) f = f * c;
      for (auto& f : t2) f = f * c;
      const TrigElement cs = TrigElement::scalar(tag, c);
      trail.push_back(RingMat2{zero, one, cs, -(cs * ht)});
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  // r0 is an associate of the gcd; its constant term is nonzero because it
  // divides an element with nonzero constant term.
  LaurentPoly gz = vec_to_laurent(r0, v);
  const long t = gz.min_exp();
  LaurentPoly gs = gz.shifted(-t);
  const RatFun u = gs.c.at(gs.max_exp());

  LaurentPoly fix(v);
  fix.add(-t, u.inv());
  trail.push_back(RingMat2{back(fix), zero, zero, one});

  LaurentPoly g = gs;
  for (auto& [e, k] : g.c) k = k / u;

  LaurentPoly ca = vec_to_laurent(s0, v) * fix * monomial(v, -sp);
  LaurentPoly cb = vec_to_laurent(t0, v) * fix * monomial(v, -sq);
  return BezoutCertificate{back(g), back(ca), back(cb), std::move(trail)};
}

MultiBezoutCertificate ideal_gcd(const std::vector<TrigElement>& gens) {
  if (gens.empty()) throw PreconditionError("ideal_gcd: empty generator list");
  const RingTag& tag = gens.front().tag();
  for (const auto& g : gens)
    if (g.tag() != tag) throw TagMismatchError("ideal_gcd: mixed ring tags");

  TrigElement g = TrigElement::zero(tag);
  std::vector<TrigElement> cofs;
  for (const auto& gen : gens) {
    if (g.is_zero() && gen.is_zero()) {
      cofs.push_back(TrigElement::zero(tag));
      continue;
    }
    BezoutCertificate c = gcd_pair(g, gen);
    for (auto& cf : cofs) cf = cf * c.cofactor_a;
    cofs.push_back(c.cofactor_b);
    g = c.g;
  }
  return MultiBezoutCertificate{g, std::move(cofs)};
}

bool check_certificate(const BezoutCertificate& cert, const TrigElement& p,
                       const TrigElement& q) {
  if (cert.cofactor_a * p + cert.cofactor_b * q != cert.g) return false;
  TrigElement a = p, b = q;
  for (const auto& m : cert.trail) {
    if (!is_ring_unit(m.det())) return false;
    std::tie(a, b) = m.apply(a, b);
  }
  return a == cert.g && b.is_zero();
}

}  // namespace operant
