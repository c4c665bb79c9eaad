#include "operant/poly.hpp"

#include "operant/errors.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace operant {

std::string var_name(Var v) { return v == Var::s ? "s" : "sigma"; }

Var parse_var(const std::string& name) {
  if (name == "s") return Var::s;
  if (name == "sigma") return Var::sigma;
  throw ParseError("unknown base variable: " + name);
}

Poly::Poly(Var var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Var var, const Rational& value) {
  Poly p(var);
  if (value != 0) p.c_ = {value};
  return p;
}

Poly Poly::variable(Var var) { return Poly(var, {Rational(0), Rational(1)}); }

Poly Poly::linear(Var var, const Rational& c1, const Rational& c0) {
  return Poly(var, {c0, c1});
}

Rational Poly::constant_value() const {
  if (c_.size() > 1) throw PreconditionError("constant_value on non-constant polynomial");
  return c_.empty() ? Rational(0) : c_[0];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_tag(const Poly& o) const {
  if (var_ != o.var_)
    throw TagMismatchError("polynomial base variables differ: " + var_name(var_) + " vs " +
                           var_name(o.var_));
}

Poly Poly::operator-() const {
  Poly r(var_);
  r.c_.reserve(c_.size());
  for (const auto& ci : c_) r.c_.push_back(-ci);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_tag(o);
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly(var_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_tag(o);
  if (is_zero() || o.is_zero()) return Poly(var_);
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Poly(var_, std::move(out));
}

Poly Poly::operator*(const Rational& k) const {
  if (k == 0) return Poly(var_);
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& ci : c_) out.push_back(ci * k);
  return Poly(var_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_tag(d);
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  Poly q(var_);
  Poly r = *this;
  const int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    const int shift = r.degree() - dd;
    const Rational factor = r.leading() / d.leading();
    std::vector<Rational> mono(static_cast<size_t>(shift) + 1, Rational(0));
    mono.back() = factor;
    Poly term(var_, std::move(mono));
    q = q + term;
    r = r - term * d;
  }
  return {q, r};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(var_);
  std::vector<Rational> out;
  out.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(var_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) throw PreconditionError("monic of zero polynomial");
  return *this * (Rational(1) / leading());
}

Poly Poly::pow(unsigned n) const {
  Poly acc = Poly::constant(var_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

double Poly::coeff_scale(const std::complex<double>& z) const {
  const double az = std::max(1.0, std::abs(z));
  double acc = 0.0;
  double p = 1.0;
  for (const auto& ci : c_) {
    acc += std::abs(to_double(ci)) * p;
    p *= az;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational ck = coeff(k);
    if (ck == 0) continue;
    if (!first) os << (ck > 0 ? " + " : " - ");
    else if (ck < 0) os << "-";
    const Rational a = ck < 0 ? Rational(-ck) : ck;
    if (k == 0 || a != 1) os << to_string(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var_name(var_);
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

namespace {

void int_trim(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Divides out the integer content and normalizes the leading sign.
void make_primitive(std::vector<Integer>& v) {
  Integer content = 0;
  for (const auto& w : v) content = boost::multiprecision::gcd(content, w);
  if (content > 1)
    for (auto& w : v) w /= content;
  if (!v.empty() && v.back() < 0)
    for (auto& w : v) w = -w;
}

// Primitive integer image of a nonzero rational polynomial (same associate
// class over the rational field).
std::vector<Integer> primitive_int_coeffs(const Poly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(numerator_of(c) * (den_lcm / denominator_of(c)));
  make_primitive(v);
  return v;
}

// Exact pseudo-remainder lead(b)^(deg a - deg b + 1) * (a mod b).  The
// elimination loop may shed several degrees per pass, so the missing powers
// of lead(b) are applied afterwards to keep the scaling exact.
std::vector<Integer> prem_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer& lb = b.back();
  int pending = static_cast<int>(a.size() - b.size()) + 1;
  while (a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    const Integer la = a.back();
    for (auto& w : a) w *= lb;
    --pending;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    int_trim(a);
  }
  for (; pending > 0; --pending)
    for (auto& w : a) w *= lb;
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

std::uint64_t residue(const Integer& v, std::uint64_t m) {
  Integer r = v % Integer(m);
  if (r < 0) r += Integer(m);
  return r.convert_to<std::uint64_t>();
}

// Degree of gcd(p, q) over the prime field F_m, or -1 when the prime is
// unusable (a denominator or a leading coefficient vanishes mod m).  When
// usable this degree bounds the true gcd degree from above.
int modular_gcd_degree(const Poly& p, const Poly& q, std::uint64_t m) {
  auto reduce = [&](const Poly& f, std::vector<std::uint64_t>& out) {
    out.clear();
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
      const std::uint64_t den = residue(denominator_of(c), m);
      if (den == 0) return false;
      out.push_back(mulmod(residue(numerator_of(c), m), powmod(den, m - 2, m), m));
    }
    return !out.empty() && out.back() != 0;
  };
  std::vector<std::uint64_t> a, b;
  if (!reduce(p, a) || !reduce(q, b)) return -1;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const size_t shift = a.size() - b.size();
      const std::uint64_t f = mulmod(a.back(), inv, m);
      for (size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = mulmod(f, b[i], m);
        a[i + shift] = a[i + shift] >= t ? a[i + shift] - t : a[i + shift] + m - t;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.is_zero() ? q : q.monic();
  if (q.is_zero()) return p.monic();
  // Coprimality filter: a vanishing gcd degree modulo a usable word-sized
  // prime certifies that the true gcd is constant, which is the overwhelming
  // case in fraction normalization and costs only word arithmetic.
  static constexpr std::uint64_t kPrimes[] = {
      2305843009213693951ULL, 9223372036854775783ULL, 18446744073709551557ULL};
  for (const std::uint64_t m : kPrimes)
    if (modular_gcd_degree(p, q, m) == 0) return Poly(p.var(), {Rational(1)});
  // Subresultant pseudo-remainder chain over the integers (Brown).  Unlike
  // both the rational remainder sequence and the primitive chain it needs no
  // bignum gcds along the way: every step divides exactly by a predicted
  // factor, which keeps coefficient growth polynomially bounded.
  std::vector<Integer> a = primitive_int_coeffs(p);
  std::vector<Integer> b = primitive_int_coeffs(q);
  if (a.size() < b.size()) std::swap(a, b);
  Integer g = 1, h = 1;
  while (!b.empty()) {
    const unsigned delta = static_cast<unsigned>(a.size() - b.size());
    std::vector<Integer> r = prem_exact(std::move(a), b);
    const Integer divisor = g * boost::multiprecision::pow(h, delta);
    for (auto& w : r) w /= divisor;
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta > 0)
      h = boost::multiprecision::pow(g, delta) / boost::multiprecision::pow(h, delta - 1);
  }
  make_primitive(a);
  std::vector<Rational> rc;
  rc.reserve(a.size());
  for (const auto& w : a) rc.emplace_back(w);
  return Poly(p.var(), std::move(rc)).monic();
}

Poly poly_lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly::zero(p.var());
  const Poly g = poly_gcd(p, q);
  return (p * q).divmod(g).first.monic();
}

}  // namespace operant
