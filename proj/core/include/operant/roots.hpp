#pragma once

#include "operant/poly.hpp"

#include <complex>
#include <vector>

namespace operant {

struct RootOptions {
  double tol = 1e-10;   // residual bound relative to the coefficient scale
  int newton_steps = 2; // polish iterations per root
};

// All complex roots of a nonzero polynomial, with multiplicity.  Companion
// matrix eigenvalues followed by a Newton polish; throws RootFindingError if
// any root misses the residual bound |p(r)| <= tol * scale(p, r).
std::vector<std::complex<double>> find_roots(const Poly& p, const RootOptions& opt = {});

}  // namespace operant
