#pragma once

#include "operant/sigma.hpp"

#include <complex>
#include <ostream>
#include <vector>

namespace operant {

// Time-domain counterpart of sinh(x*sqrt(sigma))/sqrt(sigma) for
// second-order-in-time symbols sigma(s) = a s^2 + b s + c with a > 0:
// a compactly supported kernel
//   S(x, t) = exp(-alpha t) / (2 tau) * J0(beta * sqrt(tau^2 x^2 - t^2))
// on |t| <= tau x (zero outside), with tau = sqrt(a), alpha = b / (2a),
// beta^2 = alpha^2 - c/a.  J0 is evaluated through its even series in the
// squared argument, so beta^2 < 0 (the I0 regime) needs no special casing.
// Then  integral_{-tau x}^{tau x} e^{-s t} S(x, t) dt
//         = sinh(x sqrt(sigma(s))) / sqrt(sigma(s))  for every complex s.

// Requires a > 0 in sigma and x >= 0.
double wave_kernel(const SigmaSpec& sigma, double x, double t);

struct KernelSupport {
  double lo, hi;
};
KernelSupport kernel_support(const SigmaSpec& sigma, double x);

// Two-sided Laplace integral of the kernel by adaptive Simpson quadrature;
// depth bounds the interval bisection, so a small depth forces a coarse grid.
std::complex<double> laplace_numeric(const SigmaSpec& sigma, double x,
                                     const std::complex<double>& s0, double tol = 1e-10,
                                     int depth = 28);

// Closed form sinh(x sqrt(sigma(s0)))/sqrt(sigma(s0)), stable as sigma -> 0.
std::complex<double> laplace_reference(const SigmaSpec& sigma, double x,
                                       const std::complex<double>& s0);

// For first-order-in-time symbols (a = 0, sigma = b s + c) the kernel is not
// a function, but the transform is entire in s:
//   sinh(x sqrt(sigma))/sqrt(sigma) = sum_k sigma^k x^(2k+1) / (2k+1)!
// Returns the first `terms` coefficients of the expansion in powers of s,
//   coeff_j = sum_{k >= j} binom(k, j) b^j c^(k-j) x^(2k+1) / (2k+1)!.
std::vector<double> s_series(const SigmaSpec& sigma, double x, size_t terms);

// Uniform kernel samples over [lo, hi]; pairs (t, S(x, t)).
std::vector<std::pair<double, double>> kernel_samples(const SigmaSpec& sigma, double x, double lo,
                                                      double hi, size_t n);

// Samples as CSV rows "t,value" with a header line.
void write_kernel_csv(std::ostream& os, const SigmaSpec& sigma, double x, double lo, double hi,
                      size_t n);

}  // namespace operant
