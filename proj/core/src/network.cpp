#include "operant/network.hpp"

#include "operant/errors.hpp"
#include "operant/laurent.hpp"

#include <sstream>

namespace operant {

void validate(const NetworkSpec& spec) {
  if (spec.branches.empty()) throw PreconditionError("network: no branches");
  for (size_t i = 0; i < spec.branches.size(); ++i) {
    const Branch& br = spec.branches[i];
    const std::string tagmsg = "branch " + std::to_string(i);
    if (br.length <= 0) throw PreconditionError("network: " + tagmsg + " has non-positive length");
    if (br.boundary_input.size() != spec.num_inputs ||
        br.interior_input.size() != spec.num_inputs)
      throw PreconditionError("network: " + tagmsg + " input columns disagree with num_inputs");
    bool nonzero = false;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (br.left[r][c] != 0 || br.right[r][c] != 0) nonzero = true;
    if (!nonzero) throw PreconditionError("network: " + tagmsg + " has empty boundary coupling");
  }
}

RingTag network_tag(const NetworkSpec& spec) { return RingTag{spec.sigma, Rational(1)}; }

RingMatrix trace_propagator(const RingTag& tag, const Rational& displacement) {
  const RatFun sigma = tag.sigma.as_ratfun();
  RingMatrix m(tag, 2, 2);
  m.at(0, 0) = make_term(tag, TrigKind::C, displacement, Rational(1));
  m.at(0, 1) = make_term(tag, TrigKind::S, displacement, Rational(1));
  m.at(1, 0) = make_term(tag, TrigKind::S, displacement, sigma);
  m.at(1, 1) = m.at(0, 0);
  return m;
}

std::pair<TrigElement, TrigElement> forcing_column(const RingTag& tag,
                                                   const Rational& displacement, const Vec2Q& b) {
  const RatFun sigma = tag.sigma.as_ratfun();
  const TrigElement cm1 =
      make_term(tag, TrigKind::C, displacement, Rational(1)) - TrigElement::one(tag);
  const TrigElement s = make_term(tag, TrigKind::S, displacement, Rational(1));
  // (phi - I) A^{-1} b with A = [[0, 1], [sigma, 0]].
  TrigElement top = s * b[0] + (cm1 * sigma.inv()) * b[1];
  TrigElement bottom = cm1 * b[0] + s * b[1];
  return {std::move(top), std::move(bottom)};
}

namespace {

RingMatrix const2_times(const RingTag& tag, const Mat2Q& m, const RingMatrix& phi) {
  RingMatrix r(tag, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = phi.at(0, j) * m[i][0] + phi.at(1, j) * m[i][1];
  return r;
}

}  // namespace

Presentation assemble_presentation(const NetworkSpec& spec, XiSide side) {
  validate(spec);
  const RingTag tag = network_tag(spec);
  const size_t nb = spec.branches.size();
  const size_t nu = spec.num_inputs;
  RingMatrix p(tag, 2 * nb, 2 * nb + nu);

  for (size_t i = 0; i < nb; ++i) {
    const Branch& br = spec.branches[i];
    const Rational xi = side == XiSide::left ? Rational(0) : br.length;
    const RingMatrix prop0 = trace_propagator(tag, -xi);
    const RingMatrix propL = trace_propagator(tag, br.length - xi);
    const RingMatrix block =
        const2_times(tag, br.left, prop0) + const2_times(tag, br.right, propL);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) p.at(2 * i + r, 2 * i + c) = block.at(r, c);

    for (size_t j = 0; j < nu; ++j) {
      const auto psi0 = forcing_column(tag, -xi, br.interior_input[j]);
      const auto psiL = forcing_column(tag, br.length - xi, br.interior_input[j]);
      for (int r = 0; r < 2; ++r) {
        TrigElement entry = TrigElement::scalar(tag, br.boundary_input[j][r]);
        entry = entry + psi0.first * br.left[r][0] + psi0.second * br.left[r][1];
        entry = entry + psiL.first * br.right[r][0] + psiL.second * br.right[r][1];
        p.at(2 * i + r, 2 * nb + j) = std::move(entry);
      }
    }
  }
  return Presentation{std::move(p), 2 * nb, nu, side};
}

namespace {

bool constant_scalar(const TrigElement& e, Rational& out) {
  if (e.is_zero() || e.norm() != Rational(0)) return false;
  const RatFun k = e.constant_part();
  if (!k.is_constant()) return false;
  out = k.constant_value();
  return true;
}

RingMatrix drop_row_col(const RingMatrix& m, size_t row, size_t col) {
  std::vector<size_t> rows, cols;
  for (size_t i = 0; i < m.rows(); ++i)
    if (i != row) rows.push_back(i);
  for (size_t j = 0; j < m.cols(); ++j)
    if (j != col) cols.push_back(j);
  return m.select(rows, cols);
}

}  // namespace

ReducedPresentation reduce_presentation(const RingMatrix& input) {
  RingMatrix p = input;
  std::vector<std::string> log;

  while (true) {
    // Constant-pair rows first: substitute the constrained trace and rescale
    // the surviving variable, merging the two columns into one.
    bool changed = false;
    for (size_t i = 0; i < p.rows() && !changed; ++i) {
      size_t k1 = p.cols(), k2 = p.cols();
      Rational m1, m2;
      size_t nz = 0;
      for (size_t j = 0; j < p.cols(); ++j) {
        if (p.at(i, j).is_zero()) continue;
        ++nz;
        Rational v;
        if (!constant_scalar(p.at(i, j), v)) {
          nz = 3;
          break;
        }
        if (k1 == p.cols()) {
          k1 = j;
          m1 = v;
        } else if (k2 == p.cols()) {
          k2 = j;
          m2 = v;
        }
      }
      if (nz != 2) continue;
      for (size_t r = 0; r < p.rows(); ++r) {
        if (r == i) continue;
        p.at(r, k2) = p.at(r, k2) * m1 - p.at(r, k1) * m2;
      }
      std::ostringstream os;
      os << "row " << i << ": constant pair (" << to_string(m1) << ", " << to_string(m2)
         << ") on columns (" << k1 << ", " << k2 << "); substituted column " << k1
         << " and rescaled column " << k2;
      log.push_back(os.str());
      p = drop_row_col(p, i, k1);
      changed = true;
    }
    if (changed) continue;

    // Unit pivots: solve the pivot row for its variable and substitute.
    for (size_t i = 0; i < p.rows() && !changed; ++i)
      for (size_t j = 0; j < p.cols() && !changed; ++j) {
        if (!is_ring_unit(p.at(i, j))) continue;
        const auto inv = ring_unit_inverse(p.at(i, j));
        if (!inv) continue;
        for (size_t r = 0; r < p.rows(); ++r) {
          if (r == i || p.at(r, j).is_zero()) continue;
          const TrigElement f = p.at(r, j) * *inv;
          for (size_t c = 0; c < p.cols(); ++c) p.at(r, c) = p.at(r, c) - f * p.at(i, c);
        }
        std::ostringstream os;
        os << "row " << i << ": unit pivot at column " << j << "; eliminated and dropped";
        log.push_back(os.str());
        p = drop_row_col(p, i, j);
        changed = true;
      }
    if (changed) continue;
    break;
  }

  // Drop zero rows.
  std::vector<size_t> keep_rows, all_cols;
  for (size_t j = 0; j < p.cols(); ++j) all_cols.push_back(j);
  for (size_t i = 0; i < p.rows(); ++i) {
    bool zero = true;
    for (size_t j = 0; j < p.cols(); ++j)
      if (!p.at(i, j).is_zero()) zero = false;
    if (zero)
      log.push_back("dropped zero row " + std::to_string(i));
    else
      keep_rows.push_back(i);
  }
  p = p.select(keep_rows, all_cols);

  return ReducedPresentation{std::move(p), std::move(log)};
}

}  // namespace operant
