#pragma once

#include "operant/ring_matrix.hpp"

#include <complex>
#include <string>
#include <vector>

namespace operant {

// Row echelon form over the ring: u * input = h, with u invertible (tracked
// product of gcd blocks, swaps and unit scalings; uinv is its exact inverse).
// Each pivot is normalized to leading coefficient 1.
struct HermiteForm {
  RingMatrix h;
  RingMatrix u;
  RingMatrix uinv;
  std::vector<size_t> pivot_cols;
  size_t rank;
};

HermiteForm hermite(const RingMatrix& p);

// A relation row annihilating a single generator by a non-unit.
struct TorsionWitness {
  size_t generator;
  TrigElement annihilator;
};

// Structure of the module presented by the rows of p acting on n generators.
// The authoritative torsion test is the minor criterion: the module is
// torsion-free iff the gcd of the rank-sized minors is a ring unit.  (Pivot
// reading alone can miss torsion hidden across columns.)
struct ModuleDecomposition {
  size_t free_rank;
  bool torsion_free;
  TrigElement minor_gcd;
  std::vector<TorsionWitness> witnesses;
  HermiteForm echelon;
};

ModuleDecomposition decompose(const RingMatrix& p);

// Image parametrization of the solution set of p * w = 0.
// On success: p * parametrization = 0 and flat_map * parametrization = I,
// both exactly, so w = parametrization * y recovers every solution from the
// free output y = flat_map * w.  Fails (ok = false) when torsion obstructs a
// full parametrization.
struct FlatOutput {
  bool ok;
  std::string reason;
  RingMatrix parametrization;  // n x free_rank
  RingMatrix flat_map;         // free_rank x n
};

FlatOutput flat_output(const RingMatrix& p);

// Numeric rank of the transform-side matrix across sample points.  The rank
// threshold is anchored to the largest singular value seen across the whole
// scan, so a 1x1 entry dropping to ~0 at an isolated point still registers
// (a per-point relative threshold would normalize it away).
struct SpectralScanResult {
  std::vector<std::complex<double>> points;
  std::vector<int> ranks;
  int generic_rank;
  std::vector<size_t> drop_indices;
  double reference_scale;
};

SpectralScanResult spectral_scan(const RingMatrix& p,
                                 const std::vector<std::complex<double>>& points,
                                 double rel_tol = 1e-8);

// Real zeros of the transform of f on [lo, hi]: sign-change bracketing on a
// uniform grid, bisection, then a short Newton polish.
std::vector<double> probe_zeros(const TrigElement& f, double lo, double hi, int samples = 2048,
                                double tol = 1e-10);

}  // namespace operant
