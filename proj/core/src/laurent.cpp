#include "operant/laurent.hpp"

#include "operant/errors.hpp"

#include <sstream>
#include <vector>

namespace operant {

long LaurentPoly::min_exp() const {
  if (c.empty()) throw PreconditionError("min_exp of zero Laurent polynomial");
  return c.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (c.empty()) throw PreconditionError("max_exp of zero Laurent polynomial");
  return c.rbegin()->first;
}

void LaurentPoly::add(long e, const RatFun& k) {
  if (k.is_zero()) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c.emplace(e, k);
    return;
  }
  it->second = it->second + k;
  if (it->second.is_zero()) c.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, k] : o.c) r.add(e, k);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, k] : o.c) r.add(e, -k);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(var);
  for (const auto& [e1, k1] : c)
    for (const auto& [e2, k2] : o.c) r.add(e1 + e2, k1 * k2);
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r(var);
  for (const auto& [e, coeff] : c) r.c.emplace(e + k, coeff);
  return r;
}

std::string LaurentPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << k.str() << ")";
    if (e != 0) os << "*z^" << e;
  }
  return os.str();
}

LaurentPoly to_laurent(const TrigElement& p, const RatFun& lambda) {
  if (lambda.is_zero()) throw PreconditionError("to_laurent with zero lambda");
  LaurentPoly L(p.tag().var());
  const RatFun half = RatFun::constant(p.tag().var(), Rational(1, 2));
  const RatFun half_over_lambda = half / lambda;
  for (const auto& [alpha, pair] : p.terms()) {
    if (denominator_of(alpha) != 1)
      throw PreconditionError("to_laurent requires integer indices; rescale first");
    const long e = static_cast<long>(numerator_of(alpha).convert_to<long long>());
    L.add(e, pair.c * half - pair.s * half_over_lambda);
    L.add(-e, pair.c * half + pair.s * half_over_lambda);
  }
  return L;
}

TrigElement from_laurent(const LaurentPoly& L, const RingTag& tag, const RatFun& lambda) {
  TrigElement p(tag);
  for (const auto& [e, k] : L.c) {
    if (e == 0) {
      p.accumulate(TrigKind::C, Rational(0), k);
      continue;
    }
    const Rational idx(static_cast<long long>(e > 0 ? e : -e));
    p.accumulate(TrigKind::C, idx, k);
    // z^e = C[|e|] - sign(e) * lambda * S[|e|]
    const RatFun sk = k * lambda;
    p.accumulate(TrigKind::S, idx, e > 0 ? -sk : sk);
  }
  return p;
}

std::optional<LaurentPoly> laurent_divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw PreconditionError("Laurent division by zero");
  if (p.is_zero()) return LaurentPoly(p.var);
  // Shift both to ordinary polynomials and divide; z-power shifts are units.
  const long sp = p.min_exp();
  const long sd = d.min_exp();
  std::vector<RatFun> a(static_cast<size_t>(p.max_exp() - sp) + 1, RatFun::zero(p.var));
  std::vector<RatFun> b(static_cast<size_t>(d.max_exp() - sd) + 1, RatFun::zero(p.var));
  for (const auto& [e, k] : p.c) a[static_cast<size_t>(e - sp)] = k;
  for (const auto& [e, k] : d.c) b[static_cast<size_t>(e - sd)] = k;
  if (a.size() < b.size()) return std::nullopt;
  const long deg_b = static_cast<long>(b.size()) - 1;
  std::vector<RatFun> q(a.size() - b.size() + 1, RatFun::zero(p.var));
  for (long qi = static_cast<long>(q.size()) - 1; qi >= 0; --qi) {
    const RatFun f = a[static_cast<size_t>(qi + deg_b)] / b.back();
    if (f.is_zero()) continue;
    q[static_cast<size_t>(qi)] = f;
    for (long j = 0; j <= deg_b; ++j)
      a[static_cast<size_t>(qi + j)] = a[static_cast<size_t>(qi + j)] - f * b[static_cast<size_t>(j)];
  }
  for (const auto& r : a)
    if (!r.is_zero()) return std::nullopt;
  LaurentPoly out(p.var);
  for (size_t i = 0; i < q.size(); ++i) out.add(static_cast<long>(i) + sp - sd, q[i]);
  return out;
}

std::optional<TrigElement> laurent_exact_div(const TrigElement& p, const TrigElement& d,
                                             const RatFun& lambda) {
  const Integer den =
      boost::multiprecision::lcm(p.index_denominator_lcm(), d.index_denominator_lcm());
  const Rational factor(den, Integer(1));
  const LaurentPoly lp = to_laurent(p.rescale_indices(factor), lambda);
  const LaurentPoly ld = to_laurent(d.rescale_indices(factor), lambda);
  const auto q = laurent_divide(lp, ld);
  if (!q) return std::nullopt;
  return from_laurent(*q, p.tag(), lambda).rescale_indices(Rational(1) / factor);
}

bool is_ring_unit(const TrigElement& p) {
  if (p.is_zero()) return false;
  if (is_unit(p)) return true;
  const auto lambda = sqrt_sigma(p.sigma());
  if (!lambda) return false;
  const Rational factor(p.index_denominator_lcm(), Integer(1));
  return to_laurent(p.rescale_indices(factor), *lambda).is_monomial();
}

std::optional<TrigElement> ring_unit_inverse(const TrigElement& p) {
  if (p.is_zero()) return std::nullopt;
  if (is_unit(p)) return TrigElement::scalar(p.tag(), p.constant_part().inv());
  const auto lambda = sqrt_sigma(p.sigma());
  if (!lambda) return std::nullopt;
  const Rational factor(p.index_denominator_lcm(), Integer(1));
  const LaurentPoly img = to_laurent(p.rescale_indices(factor), *lambda);
  if (!img.is_monomial()) return std::nullopt;
  const auto& [e, k] = *img.c.begin();
  LaurentPoly invimg(img.var);
  invimg.add(-e, k.inv());
  TrigElement inv =
      from_laurent(invimg, p.tag(), *lambda).rescale_indices(Rational(1) / factor);
  if (p * inv != TrigElement::one(p.tag())) return std::nullopt;
  return inv;
}

}  // namespace operant
