#include "operant/kernel.hpp"

#include "operant/errors.hpp"

#include <cmath>
#include <functional>

namespace operant {

namespace {

struct WaveData {
  double tau, alpha, beta2;
};

WaveData wave_data(const SigmaSpec& sigma) {
  if (sigma.is_indeterminate())
    throw PreconditionError("time-domain kernel needs a polynomial symbol");
  const Poly p = sigma.as_poly();
  const double a = to_double(p.coeff(2));
  const double b = to_double(p.coeff(1));
  const double c = to_double(p.coeff(0));
  if (!(a > 0.0))
    throw PreconditionError("time-domain kernel needs a positive leading coefficient");
  const double tau = std::sqrt(a);
  const double alpha = b / (2.0 * a);
  return WaveData{tau, alpha, alpha * alpha - c / a};
}

// J0 as a function of the squared argument; valid for negative u2 too,
// where it equals I0(sqrt(-u2)).
double j0_from_u2(double u2) {
  double term = 1.0, acc = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= -u2 / (4.0 * k * k);
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

std::complex<double> simpson_rec(const std::function<std::complex<double>(double)>& f, double a,
                                 double b, const std::complex<double>& fa,
                                 const std::complex<double>& fm, const std::complex<double>& fb,
                                 const std::complex<double>& whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const std::complex<double> flm = f(lm), frm = f(rm);
  const std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const std::complex<double> delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const std::complex<double> fa = f(a), fm = f(m), fb = f(b);
  const std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace

double wave_kernel(const SigmaSpec& sigma, double x, double t) {
  if (x < 0.0) throw PreconditionError("wave_kernel: x must be nonnegative");
  const WaveData w = wave_data(sigma);
  const double r2 = w.tau * x * w.tau * x - t * t;
  if (r2 < 0.0 || x == 0.0) return 0.0;
  return std::exp(-w.alpha * t) / (2.0 * w.tau) * j0_from_u2(w.beta2 * r2);
}

KernelSupport kernel_support(const SigmaSpec& sigma, double x) {
  if (x < 0.0) throw PreconditionError("kernel_support: x must be nonnegative");
  const WaveData w = wave_data(sigma);
  return KernelSupport{-w.tau * x, w.tau * x};
}

std::complex<double> laplace_numeric(const SigmaSpec& sigma, double x,
                                     const std::complex<double>& s0, double tol, int depth) {
  const KernelSupport sup = kernel_support(sigma, x);
  if (sup.hi <= sup.lo) return {0.0, 0.0};
  auto f = [&](double t) { return std::exp(-s0 * t) * wave_kernel(sigma, x, t); };
  return adaptive_simpson(f, sup.lo, sup.hi, tol, depth);
}

std::complex<double> laplace_reference(const SigmaSpec& sigma, double x,
                                       const std::complex<double>& s0) {
  const std::complex<double> w = std::sqrt(sigma.eval(s0));
  const std::complex<double> u = x * w;
  if (std::abs(u) < 1e-4) {
    const std::complex<double> u2 = u * u;
    return x * (1.0 + u2 / 6.0 + u2 * u2 / 120.0);
  }
  return std::sinh(u) / w;
}

std::vector<double> s_series(const SigmaSpec& sigma, double x, size_t terms) {
  if (sigma.is_indeterminate())
    throw PreconditionError("s_series needs a polynomial symbol");
  const Poly p = sigma.as_poly();
  if (p.coeff(2) != 0)
    throw PreconditionError("s_series needs a first-order symbol (zero s^2 coefficient)");
  const double b = to_double(p.coeff(1));
  const double c = to_double(p.coeff(0));

  std::vector<double> out(terms, 0.0);
  for (size_t j = 0; j < terms; ++j) {
    // First summand (k = j): b^j x^(2j+1)/(2j+1)!; successive k pick up the
    // factor binom(k+1,j)/binom(k,j) * c * x^2/((2k+2)(2k+3)).
    double fact = 1.0;
    for (size_t i = 1; i <= 2 * j + 1; ++i) fact *= static_cast<double>(i);
    double kterm =
        std::pow(b, static_cast<double>(j)) * std::pow(x, static_cast<double>(2 * j + 1)) / fact;
    double acc = kterm;
    for (size_t k = j; k < j + 400; ++k) {
      kterm *= (static_cast<double>(k + 1) / static_cast<double>(k + 1 - j)) * c * x * x /
               (static_cast<double>(2 * k + 2) * static_cast<double>(2 * k + 3));
      acc += kterm;
      if (std::abs(kterm) < 1e-18 * (std::abs(acc) + 1e-300)) break;
    }
    out[j] = acc;
  }
  return out;
}

std::vector<std::pair<double, double>> kernel_samples(const SigmaSpec& sigma, double x, double lo,
                                                      double hi, size_t n) {
  if (n < 2) throw PreconditionError("kernel_samples: need at least two samples");
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.emplace_back(t, wave_kernel(sigma, x, t));
  }
  return out;
}

void write_kernel_csv(std::ostream& os, const SigmaSpec& sigma, double x, double lo, double hi,
                      size_t n) {
  os << "t,value\n";
  for (const auto& [t, v] : kernel_samples(sigma, x, lo, hi, n)) os << t << "," << v << "\n";
}

}  // namespace operant
