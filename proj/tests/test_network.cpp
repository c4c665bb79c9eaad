#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <operant/errors.hpp>
#include <operant/laurent.hpp>
#include <operant/network.hpp>

using namespace operant;
using operant::test::Rng;

namespace {

TrigElement C(const RingTag& tag, const Rational& a, const Rational& k = Rational(1)) {
  return make_term(tag, TrigKind::C, a, k);
}
TrigElement S(const RingTag& tag, const Rational& a, const Rational& k = Rational(1)) {
  return make_term(tag, TrigKind::S, a, k);
}

NetworkSpec two_branch_spec() {
  NetworkSpec spec;
  spec.sigma = SigmaSpec::indeterminate();
  spec.num_inputs = 1;
  Branch b1;
  b1.length = Rational(1);
  b1.left = Mat2Q{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
  b1.right = Mat2Q{{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}}};
  b1.boundary_input = {Vec2Q{Rational(0), Rational(-1)}};
  b1.interior_input = {Vec2Q{Rational(0), Rational(0)}};
  Branch b2 = b1;
  b2.length = Rational(2);
  b2.right = Mat2Q{{{Rational(3), Rational(5)}, {Rational(0), Rational(0)}}};
  spec.branches = {b1, b2};
  return spec;
}

NetworkSpec pinned_spec() {
  NetworkSpec spec;
  spec.sigma = SigmaSpec::indeterminate();
  spec.num_inputs = 0;
  Branch b;
  b.length = Rational(1);
  b.left = Mat2Q{{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}}};
  b.right = Mat2Q{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
  spec.branches = {b};
  return spec;
}

}  // namespace

TEST_CASE("trace propagator composes along displacements") {
  const RingTag tag{SigmaSpec::indeterminate(), Rational(1)};
  Rng rng(7070);
  for (int i = 0; i < 100; ++i) {
    const Rational d1 = operant::test::random_rational(rng, 4, 2);
    const Rational d2 = operant::test::random_rational(rng, 4, 2);
    CHECK(trace_propagator(tag, d1) * trace_propagator(tag, d2) ==
          trace_propagator(tag, d1 + d2));
  }
  CHECK(trace_propagator(tag, Rational(0)) == RingMatrix::identity(tag, 2));
  const RingMatrix phi = trace_propagator(tag, Rational(1));
  CHECK(det(phi) == TrigElement::one(tag));
}

TEST_CASE("forcing column solves the constant-forcing trace relation") {
  // A f(d) = (phi(d) - I) b for the companion block A = [[0,1],[sigma,0]],
  // which is the variation-of-constants identity for constant interior load.
  const RingTag tag{SigmaSpec::indeterminate(), Rational(1)};
  const RatFun sigma = tag.sigma.as_ratfun();
  Rng rng(7071);
  for (int i = 0; i < 50; ++i) {
    const Rational d = operant::test::random_rational(rng, 3, 2);
    const Vec2Q b{operant::test::random_rational(rng), operant::test::random_rational(rng)};
    const auto [f1, f2] = forcing_column(tag, d, b);
    const RingMatrix phi = trace_propagator(tag, d);
    const TrigElement b1 = TrigElement::scalar(tag, b[0]);
    const TrigElement b2 = TrigElement::scalar(tag, b[1]);
    CHECK(f2 == (phi.at(0, 0) - TrigElement::one(tag)) * b1 + phi.at(0, 1) * b2);
    CHECK(f1 * sigma == phi.at(1, 0) * b1 + (phi.at(1, 1) - TrigElement::one(tag)) * b2);
    if (d == 0) {
      CHECK(f1.is_zero());
      CHECK(f2.is_zero());
    }
  }
}

TEST_CASE("assembled presentation matches the hand computation") {
  const NetworkSpec spec = two_branch_spec();
  validate(spec);
  const RingTag tag = network_tag(spec);
  const Presentation pres = assemble_presentation(spec, XiSide::right);
  REQUIRE(pres.p.rows() == 4);
  REQUIRE(pres.p.cols() == 5);
  CHECK(pres.trace_cols == 4);
  CHECK(pres.input_cols == 1);

  RingMatrix expected(tag, 4, 5);
  expected.at(0, 0) = TrigElement::one(tag);
  expected.at(0, 1) = TrigElement::scalar(tag, Rational(2));
  expected.at(1, 0) = C(tag, 1);
  expected.at(1, 1) = -S(tag, 1);
  expected.at(1, 4) = TrigElement::scalar(tag, Rational(-1));
  expected.at(2, 2) = TrigElement::scalar(tag, Rational(3));
  expected.at(2, 3) = TrigElement::scalar(tag, Rational(5));
  expected.at(3, 2) = C(tag, 2);
  expected.at(3, 3) = -S(tag, 2);
  expected.at(3, 4) = TrigElement::scalar(tag, Rational(-1));
  CHECK(pres.p == expected);
}

TEST_CASE("reduction reaches the coprime pair row") {
  const NetworkSpec spec = two_branch_spec();
  const RingTag tag = network_tag(spec);
  const Presentation pres = assemble_presentation(spec, XiSide::right);
  const ReducedPresentation red = reduce_presentation(pres.p);
  REQUIRE(red.p.rows() == 1);
  REQUIRE(red.p.cols() == 2);
  CHECK(red.p.at(0, 0) == C(tag, 1, 2) + S(tag, 1));
  CHECK(red.p.at(0, 1) == -(C(tag, 2, 5) + S(tag, 2, 3)));
  CHECK(!red.transcript.empty());
}

TEST_CASE("pinned branch reduces to its invariant from either side") {
  const NetworkSpec spec = pinned_spec();
  const RingTag tag = network_tag(spec);
  for (const XiSide side : {XiSide::left, XiSide::right}) {
    const Presentation pres = assemble_presentation(spec, side);
    const ReducedPresentation red = reduce_presentation(pres.p);
    REQUIRE(red.p.rows() == 1);
    REQUIRE(red.p.cols() == 1);
    const TrigElement entry = red.p.at(0, 0);
    const auto q = exact_div(entry, S(tag, 1));
    REQUIRE(q.has_value());
    CHECK(is_ring_unit(*q));
  }
}

TEST_CASE("interior forcing enters the input column") {
  NetworkSpec spec = pinned_spec();
  spec.num_inputs = 1;
  spec.branches[0].boundary_input = {Vec2Q{Rational(0), Rational(0)}};
  spec.branches[0].interior_input = {Vec2Q{Rational(1), Rational(0)}};
  validate(spec);
  const Presentation pres = assemble_presentation(spec, XiSide::right);
  REQUIRE(pres.p.cols() == 3);
  // The pinned trace rows see the particular solution of the constant load.
  CHECK(!pres.p.at(0, 2).is_zero());
}

TEST_CASE("validation rejects inconsistent data") {
  NetworkSpec empty;
  empty.sigma = SigmaSpec::indeterminate();
  CHECK_THROWS_AS(validate(empty), PreconditionError);

  NetworkSpec bad_len = pinned_spec();
  bad_len.branches[0].length = Rational(0);
  CHECK_THROWS_AS(validate(bad_len), PreconditionError);

  NetworkSpec bad_cols = pinned_spec();
  bad_cols.num_inputs = 2;
  bad_cols.branches[0].boundary_input = {Vec2Q{Rational(1), Rational(0)}};
  CHECK_THROWS_AS(validate(bad_cols), PreconditionError);

  NetworkSpec zero_rows = pinned_spec();
  zero_rows.branches[0].left = Mat2Q{};
  zero_rows.branches[0].right = Mat2Q{};
  CHECK_THROWS_AS(validate(zero_rows), PreconditionError);
}
