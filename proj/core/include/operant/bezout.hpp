#pragma once

#include "operant/laurent.hpp"
#include "operant/trig_element.hpp"

#include <vector>

namespace operant {

// 2x2 matrix over the ring; certifies that a division/gcd step replaces a
// generator pair by another pair of the same ideal.
struct RingMat2 {
  TrigElement m00, m01, m10, m11;

  static RingMat2 identity(const RingTag& tag);
  static RingMat2 swap_rows(const RingTag& tag);
  RingMat2 operator*(const RingMat2& o) const;
  // (m00*p + m01*q, m10*p + m11*q)
  std::pair<TrigElement, TrigElement> apply(const TrigElement& p, const TrigElement& q) const;
  TrigElement det() const;
  RingMat2 rescale_indices(const Rational& factor) const;
};

// g = cofactor_a * p + cofactor_b * q, with the elementary transform trail
// (in application order) whose product maps (p, q) to (g, 0).
struct BezoutCertificate {
  TrigElement g;
  TrigElement cofactor_a;
  TrigElement cofactor_b;
  std::vector<RingMat2> trail;
};

struct MultiBezoutCertificate {
  TrigElement g;
  std::vector<TrigElement> cofactors;  // sum_i cofactors[i] * gens[i] = g
};

struct DivisionStepResult {
  TrigElement pbar;
  TrigElement qbar;
  RingMat2 transform;  // (pbar, qbar) = transform.apply(p, q)
  int case_id;         // 1, 2 or 3
};

// Membership in the multiplicative division subset: integer indices, all of
// the same parity.  The zero element belongs vacuously.
bool in_parity_subset(const TrigElement& e);

// One step of the division algorithm on the parity subset.
// pre: p, q in the subset, norm(p) >= norm(q) > 0.
// post: same ideal, and either norm(p) > norm(pbar) >= norm(qbar) or qbar = 0.
// Case 1 (norm gap): single quotient term from the 2x2 leading system.
// Case 2 (equal norms, proportional leading pairs): cancel, then finish as
//         case 1 (or eliminate outright if a unit remains).
// Case 3 (equal norms, independent leading pairs): normalize the leading
//         pairs and pull both norms down by one index step.
// Throws PreconditionError when a leading system is singular, which can only
// happen if sqrt(sigma) exists in the field (use the Laurent engine then).
DivisionStepResult division_step(const TrigElement& p, const TrigElement& q);

// Unit normalization: returns (g / u, u) where u is the leading C coefficient
// when nonzero, else the leading S coefficient.
std::pair<TrigElement, RatFun> normalize_leading(const TrigElement& g);

// gcd of the ideal (p, q) with Bezout cofactors; dispatches on sqrt(sigma):
// present -> Laurent Euclid, absent -> parity-subset division to exhaustion
// (indices rescaled by twice the denominator lcm so inputs land in the
// subset).  Result normalized per normalize_leading.
BezoutCertificate gcd_pair(const TrigElement& p, const TrigElement& q);

// Extended Euclid in the Laurent image.  Inputs must be the images of the
// (index-rescaled) operands; the certificate is mapped back to the ring.
BezoutCertificate laurent_gcd(const LaurentPoly& p, const LaurentPoly& q, const RingTag& tag,
                              const RatFun& lambda);

// Fold of gcd_pair across a nonempty generator list.
MultiBezoutCertificate ideal_gcd(const std::vector<TrigElement>& gens);

// Re-verifies a certificate: Bezout identity, trail determinants are ring
// units, and the trail product maps (p, q) to (g, 0).
bool check_certificate(const BezoutCertificate& cert, const TrigElement& p,
                       const TrigElement& q);

}  // namespace operant
