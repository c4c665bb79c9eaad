#include "operant/roots.hpp"

#include "operant/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace operant {

namespace {

std::complex<double> horner(const std::vector<double>& c, const std::complex<double>& z) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<std::complex<double>> find_roots(const Poly& p, const RootOptions& opt) {
  if (p.is_zero()) throw PreconditionError("find_roots on the zero polynomial");
  const int n = p.degree();
  if (n == 0) return {};

  // Monic double coefficients.
  std::vector<double> c(static_cast<size_t>(n) + 1);
  const Rational lead = p.leading();
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = to_double(p.coeff(k) / lead);

  std::vector<double> dc(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) dc[static_cast<size_t>(k - 1)] = k * c[static_cast<size_t>(k)];

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<size_t>(i)];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw RootFindingError("companion eigenvalue iteration failed for " + p.str());

  std::vector<std::complex<double>> roots;
  roots.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::complex<double> r = solver.eigenvalues()(i);
    for (int it = 0; it < opt.newton_steps; ++it) {
      const std::complex<double> pv = horner(c, r);
      const std::complex<double> dv = horner(dc, r);
      if (std::abs(dv) < 1e-300) break;  // multiple root; keep the eigenvalue
      const std::complex<double> step = pv / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
    roots.push_back(r);
  }

  for (const auto& r : roots) {
    const double scale = std::max(1.0, p.monic().coeff_scale(r));
    if (std::abs(horner(c, r)) > opt.tol * scale)
      throw RootFindingError("root residual above tolerance for " + p.str());
  }

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace operant
