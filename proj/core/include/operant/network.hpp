#pragma once

#include "operant/ring_matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace operant {

using Mat2Q = std::array<std::array<Rational, 2>, 2>;
using Vec2Q = std::array<Rational, 2>;

// One 1-D constituent on [0, length] governed by y'' = sigma y, coupled to
// the rest of the network through trace conditions
//   left * (y(0), y'(0)) + right * (y(L), y'(L)) + boundary_input * u
//     + interior forcing contributions = 0
// with one column per input channel in boundary_input / interior_input.
struct Branch {
  Rational length;
  Mat2Q left{};
  Mat2Q right{};
  std::vector<Vec2Q> boundary_input;  // per input channel
  std::vector<Vec2Q> interior_input;  // constant-in-x forcing, per channel
};

struct NetworkSpec {
  SigmaSpec sigma = SigmaSpec::indeterminate();
  size_t num_inputs = 0;
  std::vector<Branch> branches;
};

// Throws PreconditionError on inconsistent data (non-positive lengths,
// input column counts that disagree with num_inputs, no branches, or a
// branch whose boundary rows are all zero).
void validate(const NetworkSpec& spec);

// Common ring for all branches: unit index scale, indices carry the lengths.
RingTag network_tag(const NetworkSpec& spec);

enum class XiSide { left, right };

// Fundamental trace propagator of one branch: (y, y')(x) = phi(x - xi) *
// (y, y')(xi), as a 2x2 block over the ring.
RingMatrix trace_propagator(const RingTag& tag, const Rational& displacement);

// Particular-trace column for constant-in-x forcing b: (phi - I) A^{-1} b.
std::pair<TrigElement, TrigElement> forcing_column(const RingTag& tag,
                                                   const Rational& displacement, const Vec2Q& b);

// Presentation of the trace module: rows are the boundary couplings written
// in the traces taken at side xi of every branch, followed by the input
// columns.  Shape: (2 * branches) x (2 * branches + num_inputs).
struct Presentation {
  RingMatrix p;
  size_t trace_cols;
  size_t input_cols;
  XiSide side;
};

Presentation assemble_presentation(const NetworkSpec& spec, XiSide side);

// Exact reduction of an assembled presentation: first merge the trace pair
// of any row with exactly two nonzero constant entries (substituting the
// Robin-type constraint), then eliminate along unit pivots, then drop zero
// rows.  Every step is an invertible change recorded in the transcript.
struct ReducedPresentation {
  RingMatrix p;
  std::vector<std::string> transcript;
};

ReducedPresentation reduce_presentation(const RingMatrix& p);

}  // namespace operant
