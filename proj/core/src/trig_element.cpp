#include "operant/trig_element.hpp"

#include "operant/errors.hpp"
#include "operant/laurent.hpp"


#include <cmath>
#include <sstream>
#include <vector>

namespace operant {

TrigElement TrigElement::one(const RingTag& tag) {
  return scalar(tag, Rational(1));
}

TrigElement TrigElement::scalar(const RingTag& tag, const RatFun& k) {
  TrigElement e(tag);
  e.accumulate(TrigKind::C, Rational(0), k);
  return e;
}

TrigElement TrigElement::scalar(const RingTag& tag, const Rational& k) {
  return scalar(tag, RatFun::constant(tag.var(), k));
}

std::optional<Rational> TrigElement::norm() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

TrigPair TrigElement::leading_pair() const {
  if (terms_.empty()) throw PreconditionError("leading pair of the zero element");
  return terms_.rbegin()->second;
}

RatFun TrigElement::coeff(TrigKind kind, const Rational& alpha) const {
  const auto it = terms_.find(alpha);
  if (it == terms_.end()) return RatFun::zero(tag_.var());
  return kind == TrigKind::C ? it->second.c : it->second.s;
}

RatFun TrigElement::constant_part() const { return coeff(TrigKind::C, Rational(0)); }

void TrigElement::check_tag(const TrigElement& o) const {
  if (tag_ != o.tag_) throw TagMismatchError("ring elements with different sigma/ell tags");
}

void TrigElement::accumulate(TrigKind kind, Rational alpha, const RatFun& coeff) {
  if (coeff.var() != tag_.var())
    throw TagMismatchError("coefficient base variable does not match the ring tag");
  if (coeff.is_zero()) return;
  bool negate = false;
  if (alpha < 0) {
    alpha = -alpha;
    if (kind == TrigKind::S) negate = true;
  }
  if (kind == TrigKind::S && alpha == 0) return;  // S[0] = 0
  auto it = terms_.find(alpha);
  if (it == terms_.end())
    it = terms_.emplace(alpha, TrigPair{RatFun::zero(tag_.var()), RatFun::zero(tag_.var())}).first;
  RatFun& slot = kind == TrigKind::C ? it->second.c : it->second.s;
  slot = negate ? slot - coeff : slot + coeff;
  if (it->second.c.is_zero() && it->second.s.is_zero()) terms_.erase(it);
}

TrigElement TrigElement::operator-() const {
  TrigElement r(tag_);
  for (const auto& [alpha, pair] : terms_) r.terms_.emplace(alpha, TrigPair{-pair.c, -pair.s});
  return r;
}

TrigElement TrigElement::operator+(const TrigElement& o) const {
  check_tag(o);
  TrigElement r = *this;
  for (const auto& [alpha, pair] : o.terms_) {
    r.accumulate(TrigKind::C, alpha, pair.c);
    r.accumulate(TrigKind::S, alpha, pair.s);
  }
  return r;
}

TrigElement TrigElement::operator-(const TrigElement& o) const { return *this + (-o); }

TrigElement TrigElement::operator*(const TrigElement& o) const {
  check_tag(o);
  TrigElement r(tag_);
  if (is_zero() || o.is_zero()) return r;
  const RatFun half = RatFun::constant(tag_.var(), Rational(1, 2));
  const RatFun inv_two_sigma = half / tag_.sigma.as_ratfun();
  for (const auto& [a, pa] : terms_) {
    for (const auto& [b, pb] : o.terms_) {
      const Rational sum = a + b;
      const Rational diff = a - b;
      // C[a]*C[b] = (C[a+b] + C[a-b])/2
      if (!pa.c.is_zero() && !pb.c.is_zero()) {
        const RatFun k = pa.c * pb.c * half;
        r.accumulate(TrigKind::C, sum, k);
        r.accumulate(TrigKind::C, diff, k);
      }
      // S[a]*S[b] = (C[a+b] - C[a-b])/(2 sigma)
      if (!pa.s.is_zero() && !pb.s.is_zero()) {
        const RatFun k = pa.s * pb.s * inv_two_sigma;
        r.accumulate(TrigKind::C, sum, k);
        r.accumulate(TrigKind::C, diff, -k);
      }
      // C[a]*S[b] = (S[a+b] - S[a-b])/2
      if (!pa.c.is_zero() && !pb.s.is_zero()) {
        const RatFun k = pa.c * pb.s * half;
        r.accumulate(TrigKind::S, sum, k);
        r.accumulate(TrigKind::S, diff, -k);
      }
      // S[a]*C[b] = (S[a+b] + S[a-b])/2
      if (!pa.s.is_zero() && !pb.c.is_zero()) {
        const RatFun k = pa.s * pb.c * half;
        r.accumulate(TrigKind::S, sum, k);
        r.accumulate(TrigKind::S, diff, k);
      }
    }
  }
  return r;
}

TrigElement TrigElement::operator*(const RatFun& k) const {
  TrigElement r(tag_);
  if (k.is_zero()) return r;
  for (const auto& [alpha, pair] : terms_) r.terms_.emplace(alpha, TrigPair{pair.c * k, pair.s * k});
  return r;
}

TrigElement TrigElement::operator*(const Rational& k) const {
  return *this * RatFun::constant(tag_.var(), k);
}

TrigElement TrigElement::pow(unsigned n) const {
  TrigElement acc = one(tag_);
  TrigElement base = *this;
  while (n) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

TrigElement TrigElement::rescale_indices(const Rational& factor) const {
  if (factor <= 0) throw PreconditionError("index rescale factor must be positive");
  TrigElement r(tag_);
  for (const auto& [alpha, pair] : terms_) r.terms_.emplace(alpha * factor, pair);
  return r;
}

Integer TrigElement::index_denominator_lcm() const {
  Integer d{1};
  for (const auto& [alpha, pair] : terms_) {
    (void)pair;
    d = boost::multiprecision::lcm(d, denominator_of(alpha));
  }
  return d;
}

bool TrigElement::has_polynomial_coeffs() const {
  for (const auto& [alpha, pair] : terms_) {
    (void)alpha;
    if (!pair.c.is_polynomial() || !pair.s.is_polynomial()) return false;
  }
  return true;
}

namespace {

// sinh(m*w)/w, stable as w -> 0 (limit m); even in w.
std::complex<double> sinh_over_w(double m, const std::complex<double>& w) {
  const std::complex<double> u = m * w;
  if (std::abs(u) < 1e-4) {
    const std::complex<double> u2 = u * u;
    return m * (1.0 + u2 / 6.0 + u2 * u2 / 120.0);
  }
  return std::sinh(u) / w;
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> basis_values(
    const RingTag& tag, const Rational& alpha, const std::complex<double>& z) {
  const std::complex<double> w = std::sqrt(tag.sigma.eval(z));
  const double m = to_double(alpha) * to_double(tag.ell);
  return {std::cosh(m * w), sinh_over_w(m, w)};
}

std::complex<double> TrigElement::laplace_eval(const std::complex<double>& z) const {
  const std::complex<double> sv = tag_.sigma.eval(z);
  const std::complex<double> w = std::sqrt(sv);
  const double ell = to_double(tag_.ell);
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [alpha, pair] : terms_) {
    const double m = to_double(alpha) * ell;
    if (!pair.c.is_zero()) acc += pair.c.eval(z) * std::cosh(m * w);
    if (!pair.s.is_zero()) acc += pair.s.eval(z) * sinh_over_w(m, w);
  }
  return acc;
}

std::string TrigElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const RatFun& k, const std::string& basis) {
    if (k.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    if (basis.empty()) {
      os << k.str();
      return;
    }
    if (k.is_constant() && k.constant_value() == 1) os << basis;
    else if (k.is_constant() && k.constant_value() == -1) os << "-" << basis;
    else if (k.is_polynomial() && k.num().degree() == 0) os << k.str() << "*" << basis;
    else os << "(" << k.str() << ")*" << basis;
  };
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string idx = to_string(it->first);
    if (it->first == 0) emit(it->second.c, "");
    else emit(it->second.c, "C[" + idx + "]");
    emit(it->second.s, "S[" + idx + "]");
  }
  return os.str();
}

TrigElement make_term(const RingTag& tag, TrigKind kind, const Rational& alpha,
                      const RatFun& coeff) {
  TrigElement e(tag);
  e.accumulate(kind, alpha, coeff);
  return e;
}

TrigElement make_term(const RingTag& tag, TrigKind kind, const Rational& alpha,
                      const Rational& coeff) {
  return make_term(tag, kind, alpha, RatFun::constant(tag.var(), coeff));
}

bool is_unit(const TrigElement& p) {
  const auto n = p.norm();
  return n.has_value() && *n == 0;
}

namespace {

// Exact Gaussian elimination over the coefficient field; returns nullopt on
// inconsistency.  Underdetermined free variables are set to zero (cannot
// occur in irreducible configurations where multiplication is injective, but
// the re-multiplication check downstream keeps this honest regardless).
std::optional<std::vector<RatFun>> solve_linear(std::vector<std::vector<RatFun>> A,
                                                std::vector<RatFun> rhs, Var var) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t i = row; i < rows; ++i)
      if (!A[i][col].is_zero()) { pr = i; break; }
    if (pr == SIZE_MAX) continue;
    std::swap(A[pr], A[row]);
    std::swap(rhs[pr], rhs[row]);
    const RatFun inv = A[row][col].inv();
    for (size_t j = col; j < cols; ++j) A[row][j] = A[row][j] * inv;
    rhs[row] = rhs[row] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || A[i][col].is_zero()) continue;
      const RatFun f = A[i][col];
      for (size_t j = col; j < cols; ++j) A[i][j] = A[i][j] - f * A[row][j];
      rhs[i] = rhs[i] - f * rhs[row];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<RatFun> x(cols, RatFun::zero(var));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] != SIZE_MAX) x[col] = rhs[pivot_of_col[col]];
  return x;
}

std::optional<TrigElement> exact_div_grid(const TrigElement& p, const TrigElement& d) {
  const Var var = p.tag().var();
  const Rational bound = *p.norm() - *d.norm();
  if (bound < 0) return std::nullopt;

  Integer den{1};
  den = boost::multiprecision::lcm(p.index_denominator_lcm(), d.index_denominator_lcm());
  const Rational step(Integer(1), den);
  std::vector<Rational> grid;
  for (Rational g(0); g <= bound; g += step) grid.push_back(g);

  // Unknown layout: u[g] (C coefficients) then v[g] for g > 0 (S coefficients).
  std::vector<std::pair<TrigKind, Rational>> unknowns;
  for (const auto& g : grid) unknowns.emplace_back(TrigKind::C, g);
  for (const auto& g : grid)
    if (g > 0) unknowns.emplace_back(TrigKind::S, g);

  // Equation rows: one per (kind, index) reachable from supp(d) x grid.
  std::map<std::pair<int, Rational>, size_t> row_of;  // 0 = C, 1 = S
  auto row_index = [&](TrigKind kind, const Rational& idx) {
    const std::pair<int, Rational> key{kind == TrigKind::C ? 0 : 1, idx};
    const auto it = row_of.find(key);
    if (it != row_of.end()) return it->second;
    const size_t r = row_of.size();
    row_of.emplace(key, r);
    return r;
  };
  for (const auto& [alpha, pair] : d.terms()) {
    (void)pair;
    for (const auto& g : grid) {
      row_index(TrigKind::C, alpha + g);
      Rational diff = alpha - g;
      if (diff < 0) diff = -diff;
      row_index(TrigKind::C, diff);
      if (alpha + g > 0) row_index(TrigKind::S, alpha + g);
      if (diff > 0) row_index(TrigKind::S, diff);
    }
  }
  for (const auto& [alpha, pair] : p.terms()) {
    (void)pair;
    row_index(TrigKind::C, alpha);
    if (alpha > 0) row_index(TrigKind::S, alpha);
  }

  const size_t n_rows = row_of.size();
  const size_t n_cols = unknowns.size();
  std::vector<std::vector<RatFun>> A(n_rows, std::vector<RatFun>(n_cols, RatFun::zero(var)));
  std::vector<RatFun> rhs(n_rows, RatFun::zero(var));

  const RatFun half = RatFun::constant(var, Rational(1, 2));
  const RatFun inv_two_sigma = half / p.sigma().as_ratfun();

  // Column k contributes d * basis(unknown k); expand the four product rules.
  auto add_entry = [&](TrigKind kind, Rational idx, size_t col, const RatFun& k) {
    if (k.is_zero()) return;
    bool neg = false;
    if (idx < 0) {
      idx = -idx;
      if (kind == TrigKind::S) neg = true;
    }
    if (kind == TrigKind::S && idx == 0) return;
    const size_t r = row_index(kind, idx);
    A[r][col] = neg ? A[r][col] - k : A[r][col] + k;
  };
  for (size_t col = 0; col < n_cols; ++col) {
    const auto& [ukind, g] = unknowns[col];
    for (const auto& [alpha, pair] : d.terms()) {
      if (ukind == TrigKind::C) {
        if (!pair.c.is_zero()) {
          const RatFun k = pair.c * half;  // C[alpha]*C[g]
          add_entry(TrigKind::C, alpha + g, col, k);
          add_entry(TrigKind::C, alpha - g, col, k);
        }
        if (!pair.s.is_zero()) {
          const RatFun k = pair.s * half;  // S[alpha]*C[g]
          add_entry(TrigKind::S, alpha + g, col, k);
          add_entry(TrigKind::S, alpha - g, col, k);
        }
      } else {
        if (!pair.c.is_zero()) {
          const RatFun k = pair.c * half;  // C[alpha]*S[g]
          add_entry(TrigKind::S, alpha + g, col, k);
          add_entry(TrigKind::S, alpha - g, col, -k);
        }
        if (!pair.s.is_zero()) {
          const RatFun k = pair.s * inv_two_sigma;  // S[alpha]*S[g]
          add_entry(TrigKind::C, alpha + g, col, k);
          add_entry(TrigKind::C, alpha - g, col, -k);
        }
      }
    }
  }
  for (const auto& [key, r] : row_of) {
    const auto& [kind_int, idx] = key;
    rhs[r] = p.coeff(kind_int == 0 ? TrigKind::C : TrigKind::S, idx);
  }

  const auto sol = solve_linear(std::move(A), std::move(rhs), var);
  if (!sol) return std::nullopt;
  TrigElement x(p.tag());
  for (size_t col = 0; col < n_cols; ++col)
    x.accumulate(unknowns[col].first, unknowns[col].second, (*sol)[col]);
  return x;
}

}  // namespace

std::optional<TrigElement> exact_div(const TrigElement& p, const TrigElement& d) {
  if (p.tag() != d.tag()) throw TagMismatchError("exact_div operands with different tags");
  if (d.is_zero()) throw PreconditionError("exact_div by zero");
  if (p.is_zero()) return TrigElement::zero(p.tag());

  std::optional<TrigElement> x;
  if (const auto lambda = sqrt_sigma(p.sigma())) {
    x = laurent_exact_div(p, d, *lambda);
  } else {
    x = exact_div_grid(p, d);
  }
  if (!x) return std::nullopt;
  if (d * *x != p) return std::nullopt;  // re-multiplication check
  return x;
}

}  // namespace operant
