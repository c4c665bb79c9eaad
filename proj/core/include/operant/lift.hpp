#pragma once

#include "operant/bezout.hpp"
#include "operant/trig_element.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace operant {

// Scalar of the lifted coefficient ring: a finite sum of complex multiples of
// rational functions.  Complex scales absorb the (generally non-rational)
// root locations that enter during pole removal.
struct LiftedScalar {
  Var var;
  std::vector<std::pair<std::complex<double>, RatFun>> parts;

  explicit LiftedScalar(Var v) : var(v) {}
  static LiftedScalar from_ratfun(const RatFun& f);

  bool is_empty() const { return parts.empty(); }
  void add_part(const std::complex<double>& scale, const RatFun& base);
  LiftedScalar operator+(const LiftedScalar& o) const;
  LiftedScalar scaled(const std::complex<double>& w) const;
  std::complex<double> eval(const std::complex<double>& z) const;
  void compact();  // merge equal bases, drop exact-zero scales
};

struct LiftedPair {
  LiftedScalar c, s;
  explicit LiftedPair(Var v) : c(v), s(v) {}
};

// Trig combination whose coefficients are LiftedScalars divided by the
// product of the declared removable points (s - p_1)...(s - p_m).  The
// quotient is entire as a whole even though individual coefficients are not;
// evaluation near a declared point therefore regularizes the full sum via a
// small-circle mean (exact for analytic functions by the mean value
// property).
class LiftedElement {
 public:
  explicit LiftedElement(RingTag tag) : tag_(std::move(tag)) {}
  static LiftedElement from_trig(const TrigElement& e);

  const RingTag& tag() const { return tag_; }
  const std::vector<std::complex<double>>& removable_points() const { return poles_; }
  const std::map<Rational, LiftedPair>& terms() const { return terms_; }

  // In-place: this += w * y * prod(s - p_j) over the declared points, i.e.
  // adds w*y viewed over the common denominator.
  void add_scaled_trig(const TrigElement& y, const std::complex<double>& w);
  void scale(const std::complex<double>& w);
  void declare_removable(const std::complex<double>& point) { poles_.push_back(point); }

  // Numerator and denominator at z, before regularization.
  std::complex<double> eval_numerator(const std::complex<double>& z) const;
  std::complex<double> denominator(const std::complex<double>& z) const;

  std::complex<double> eval_direct(const std::complex<double>& z) const;
  std::complex<double> eval_regularized(const std::complex<double>& z) const;
  // Direct far from declared points, regularized near them.
  std::complex<double> eval(const std::complex<double>& z) const;

 private:
  RingTag tag_;
  std::map<Rational, LiftedPair> terms_;
  std::vector<std::complex<double>> poles_;
};

// Magnitude of the first `order` negative Laurent coefficients of e around
// `at`, from a 16-point contour; ~0 certifies the singularity is removable.
double pole_residual(const LiftedElement& e, const std::complex<double>& at, double radius = 1e-2,
                     int order = 4);

struct LiftOptions {
  double degenerate_tol = 1e-9;
};

// One pole-removal step.  Given a*pt + b*qt = hhat (as functions) with
// hhat(at) = 0, rewrites (a, b) in place so the identity holds with hhat
// replaced by hhat/(s - at) and both cofactors stay pole-free at `at`.
// The substitution uses whichever of pt, qt is nonzero at the root; when the
// root kills qt the roles flip (the naive one-sided division is wrong as soon
// as the other cofactor is nonzero there).  Throws DegenerateRootError when
// pt and qt both vanish at the point.
void coprime_step(LiftedElement& a, LiftedElement& b, const TrigElement& pt,
                  const TrigElement& qt, const std::complex<double>& at, double tol);

// a * p1 + b * p2 = c with entire lifted cofactors.
// Exact bookkeeping: c = pre * g where pre has denominators dividing h, and
// p1 = pt * c, p2 = qt * c with polynomial-coefficient pt, qt.  The declared
// removable points are exactly the roots of h.
struct LiftCertificate {
  LiftedElement a, b;
  TrigElement c;
  TrigElement pt, qt;
  Poly h;
  std::vector<std::complex<double>> roots;
  BezoutCertificate base;
};

LiftCertificate bezout_lift(const TrigElement& p1, const TrigElement& p2,
                            const LiftOptions& opt = {});

// |a(z)p1(z) + b(z)p2(z) - c(z)| at one frequency point.
double lift_residual(const LiftCertificate& cert, const TrigElement& p1, const TrigElement& p2,
                     const std::complex<double>& z);

}  // namespace operant
