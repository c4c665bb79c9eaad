#include "operant/modalg.hpp"

#include "operant/bezout.hpp"
#include "operant/errors.hpp"
#include "operant/laurent.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace operant {

namespace {

struct EchelonState {
  RingMatrix h, u, uinv;

  // Rows (i1, i2) <- [[a, b], [c, d]] * rows; the inverse block updates the
  // columns of uinv so that u * uinv stays the identity.
  void apply_block(size_t i1, size_t i2, const TrigElement& a, const TrigElement& b,
                   const TrigElement& c, const TrigElement& d, const TrigElement& ia,
                   const TrigElement& ib, const TrigElement& ic, const TrigElement& id) {
    auto combine_rows = [&](RingMatrix& m) {
      for (size_t j = 0; j < m.cols(); ++j) {
        TrigElement r1 = a * m.at(i1, j) + b * m.at(i2, j);
        TrigElement r2 = c * m.at(i1, j) + d * m.at(i2, j);
        m.at(i1, j) = std::move(r1);
        m.at(i2, j) = std::move(r2);
      }
    };
    combine_rows(h);
    combine_rows(u);
    for (size_t i = 0; i < uinv.rows(); ++i) {
      TrigElement c1 = uinv.at(i, i1) * ia + uinv.at(i, i2) * ic;
      TrigElement c2 = uinv.at(i, i1) * ib + uinv.at(i, i2) * id;
      uinv.at(i, i1) = std::move(c1);
      uinv.at(i, i2) = std::move(c2);
    }
  }

  void swap_rows(size_t i1, size_t i2) {
    if (i1 == i2) return;
    auto swap_in = [&](RingMatrix& m) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(i1, j), m.at(i2, j));
    };
    swap_in(h);
    swap_in(u);
    for (size_t i = 0; i < uinv.rows(); ++i) std::swap(uinv.at(i, i1), uinv.at(i, i2));
  }

  void scale_row(size_t i, const RatFun& f) {
    for (size_t j = 0; j < h.cols(); ++j) h.at(i, j) = h.at(i, j) * f;
    for (size_t j = 0; j < u.cols(); ++j) u.at(i, j) = u.at(i, j) * f;
    const RatFun finv = f.inv();
    for (size_t r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = uinv.at(r, i) * finv;
  }
};

}  // namespace

HermiteForm hermite(const RingMatrix& p) {
  const RingTag& tag = p.tag();
  const size_t m = p.rows(), n = p.cols();
  EchelonState st{p, RingMatrix::identity(tag, m), RingMatrix::identity(tag, m)};
  std::vector<size_t> pivots;
  size_t r = 0;

  for (size_t j = 0; j < n && r < m; ++j) {
    // Collect candidate rows; eliminate pairwise against the smallest norm.
    while (true) {
      std::vector<size_t> live;
      for (size_t i = r; i < m; ++i)
        if (!st.h.at(i, j).is_zero()) live.push_back(i);
      if (live.size() <= 1) break;
      size_t best = live[0];
      for (size_t i : live)
        if (*st.h.at(i, j).norm() < *st.h.at(best, j).norm()) best = i;
      size_t other = live[0] == best ? live[1] : live[0];
      const TrigElement& pe = st.h.at(best, j);
      const TrigElement& qe = st.h.at(other, j);
      BezoutCertificate cert = gcd_pair(pe, qe);
      auto q1 = exact_div(pe, cert.g), q2 = exact_div(qe, cert.g);
      if (!q1 || !q2) throw NumericError("echelon: division by the computed gcd failed");
      // [[a, b], [-q2, q1]] has determinant a*q1 + b*q2 = 1.
      st.apply_block(best, other, cert.cofactor_a, cert.cofactor_b, -*q2, *q1,  //
                     *q1, -cert.cofactor_b, *q2, cert.cofactor_a);
    }
    size_t hit = m;
    for (size_t i = r; i < m; ++i)
      if (!st.h.at(i, j).is_zero()) {
        hit = i;
        break;
      }
    if (hit == m) continue;
    st.swap_rows(r, hit);
    auto [g, unit] = normalize_leading(st.h.at(r, j));
    (void)g;
    if (!(unit.is_constant() && unit.constant_value() == 1)) st.scale_row(r, unit.inv());
    pivots.push_back(j);
    ++r;
  }
  return HermiteForm{std::move(st.h), std::move(st.u), std::move(st.uinv), std::move(pivots), r};
}

ModuleDecomposition decompose(const RingMatrix& p) {
  HermiteForm ech = hermite(p);
  const RingTag& tag = p.tag();
  const size_t n = p.cols();
  const size_t r = ech.rank;

  TrigElement minor_gcd = TrigElement::one(tag);
  if (r > 0) {
    std::vector<size_t> live_rows(r);
    for (size_t i = 0; i < r; ++i) live_rows[i] = i;
    std::vector<size_t> all_cols(n);
    for (size_t j = 0; j < n; ++j) all_cols[j] = j;
    RingMatrix top = ech.h.select(live_rows, all_cols);
    std::vector<TrigElement> mins = minors(top, r);
    std::vector<TrigElement> nonzero;
    for (auto& mi : mins)
      if (!mi.is_zero()) nonzero.push_back(std::move(mi));
    if (nonzero.empty()) throw NumericError("rank-sized minors all vanished");
    minor_gcd = ideal_gcd(nonzero).g;
  }

  std::vector<TorsionWitness> witnesses;
  for (size_t i = 0; i < r; ++i) {
    size_t nz = 0;
    for (size_t j = 0; j < n; ++j)
      if (!ech.h.at(i, j).is_zero()) ++nz;
    const TrigElement& piv = ech.h.at(i, ech.pivot_cols[i]);
    if (nz == 1 && !is_ring_unit(piv)) witnesses.push_back({ech.pivot_cols[i], piv});
  }

  return ModuleDecomposition{n - r, is_ring_unit(minor_gcd), std::move(minor_gcd),
                             std::move(witnesses), std::move(ech)};
}

FlatOutput flat_output(const RingMatrix& p) {
  const RingTag& tag = p.tag();
  const size_t n = p.cols();

  ModuleDecomposition dec = decompose(p);
  if (!dec.torsion_free) {
    return FlatOutput{false,
                      "torsion obstruction: " + dec.minor_gcd.str() +
                          " annihilates a quotient class, so no image parametrization exists",
                      RingMatrix(tag, n, 0), RingMatrix(tag, 0, n)};
  }

  HermiteForm col = hermite(p.transposed());
  const size_t r = col.rank;
  const size_t k = n - r;

  // p * u^T = (u p^T)^T has its last k columns zero; those columns of u^T
  // span the solution set, and the matching rows of (uinv)^T invert them.
  RingMatrix q(tag, n, k);
  RingMatrix f(tag, k, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      q.at(i, j) = col.u.at(r + j, i);
      f.at(j, i) = col.uinv.at(i, r + j);
    }

  if (!(p * q).is_zero() || f * q != RingMatrix::identity(tag, k))
    throw NumericError("parametrization bookkeeping failed verification");
  return FlatOutput{true, "", std::move(q), std::move(f)};
}

SpectralScanResult spectral_scan(const RingMatrix& p,
                                 const std::vector<std::complex<double>>& points,
                                 double rel_tol) {
  const size_t rows = p.rows(), cols = p.cols();
  const size_t npts = points.size();
  std::vector<Eigen::VectorXd> singulars(npts);

  auto eval_range = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      const auto flat = p.laplace_eval(points[i]);
      Eigen::MatrixXcd m(rows, cols);
      for (size_t a = 0; a < rows; ++a)
        for (size_t b = 0; b < cols; ++b) m(a, b) = flat[a * cols + b];
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      singulars[i] = svd.singularValues();
    }
  };

  const size_t workers =
      npts >= 64 ? std::max<size_t>(1, std::thread::hardware_concurrency()) : 1;
  if (workers <= 1) {
    eval_range(0, npts);
  } else {
    std::vector<std::future<void>> futs;
    const size_t chunk = (npts + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      const size_t lo = w * chunk, hi = std::min(npts, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, eval_range, lo, hi));
    }
    for (auto& f : futs) f.get();
  }

  double scale = 0.0;
  for (const auto& sv : singulars)
    if (sv.size() > 0) scale = std::max(scale, sv(0));

  SpectralScanResult res;
  res.points = points;
  res.reference_scale = scale;
  res.ranks.resize(npts, 0);
  const double thresh = rel_tol * (scale > 0.0 ? scale : 1.0);
  for (size_t i = 0; i < npts; ++i) {
    int rk = 0;
    for (Eigen::Index k = 0; k < singulars[i].size(); ++k)
      if (singulars[i](k) > thresh) ++rk;
    res.ranks[i] = rk;
  }
  res.generic_rank = 0;
  for (int rk : res.ranks) res.generic_rank = std::max(res.generic_rank, rk);
  for (size_t i = 0; i < npts; ++i)
    if (res.ranks[i] < res.generic_rank) res.drop_indices.push_back(i);
  return res;
}

std::vector<double> probe_zeros(const TrigElement& f, double lo, double hi, int samples,
                                double tol) {
  if (!(hi > lo) || samples < 2) throw PreconditionError("probe_zeros: bad interval");
  auto value = [&](double x) { return f.laplace_eval({x, 0.0}).real(); };

  std::vector<double> roots;
  const double step = (hi - lo) / samples;
  double prev = value(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + i * step;
    const double cur = value(x);
    if (prev == 0.0) roots.push_back(x - step);
    if (prev * cur < 0.0) {
      double a = x - step, b = x, fa = prev;
      for (int it = 0; it < 64 && (b - a) > tol * 0.01 * (1.0 + std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = value(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0.0)
          b = mid;
        else {
          a = mid;
          fa = fm;
        }
      }
      double x0 = 0.5 * (a + b);
      for (int it = 0; it < 3; ++it) {
        const double hstep = 1e-6 * (1.0 + std::abs(x0));
        const double d = (value(x0 + hstep) - value(x0 - hstep)) / (2.0 * hstep);
        if (std::abs(d) < 1e-300) break;
        x0 -= value(x0) / d;
      }
      roots.push_back(x0);
    }
    prev = cur;
  }
  return roots;
}

}  // namespace operant
