#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <operant/laurent.hpp>

using namespace operant;
using operant::test::Rng;
using operant::test::square_tag;

namespace {

// Integer-index random element for the Laurent correspondence.
TrigElement random_integer_element(Rng& rng, const RingTag& tag) {
  std::uniform_int_distribution<int> idx(0, 4);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  TrigElement e(tag);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    e.accumulate(kind(rng) ? TrigKind::C : TrigKind::S, Rational(idx(rng)),
                 operant::test::random_ratfun(rng, tag.var(), 1));
  return e;
}

}  // namespace

TEST_CASE("laurent image is an isomorphism on integer indices") {
  const RingTag tag = square_tag();
  const RatFun lam = RatFun::variable(Var::s);
  Rng rng(7030);
  for (int i = 0; i < 300; ++i) {
    const TrigElement a = random_integer_element(rng, tag);
    const TrigElement b = random_integer_element(rng, tag);
    CHECK(from_laurent(to_laurent(a, lam), tag, lam) == a);
    CHECK(to_laurent(a * b, lam) == to_laurent(a, lam) * to_laurent(b, lam));
    CHECK(to_laurent(a + b, lam) == to_laurent(a, lam) + to_laurent(b, lam));
  }
}

TEST_CASE("laurent basis images") {
  const RingTag tag = square_tag();
  const RatFun lam = RatFun::variable(Var::s);
  const LaurentPoly img = to_laurent(make_term(tag, TrigKind::C, Rational(1), Rational(2)), lam);
  REQUIRE(img.c.size() == 2);
  CHECK(img.c.at(-1) == RatFun::constant(Var::s, Rational(1)));
  CHECK(img.c.at(1) == RatFun::constant(Var::s, Rational(1)));

  // z maps back to the shift element C1 - lambda*S1.
  LaurentPoly z(Var::s);
  z.add(1, RatFun::constant(Var::s, Rational(1)));
  const TrigElement shift = from_laurent(z, tag, lam);
  CHECK(shift == make_term(tag, TrigKind::C, Rational(1), Rational(1)) -
                     make_term(tag, TrigKind::S, Rational(1), Rational(1)) * lam);
}

TEST_CASE("laurent division is exact or refused") {
  const RingTag tag = square_tag();
  const RatFun lam = RatFun::variable(Var::s);
  Rng rng(7031);
  int divisions = 0;
  for (int i = 0; i < 200; ++i) {
    const TrigElement a = random_integer_element(rng, tag);
    const TrigElement b = random_integer_element(rng, tag);
    if (a.is_zero() || b.is_zero()) continue;
    const LaurentPoly pa = to_laurent(a, lam), pb = to_laurent(b, lam);
    const auto q = laurent_divide(pa * pb, pb);
    REQUIRE(q.has_value());
    CHECK(*q * pb == pa * pb);
    ++divisions;
  }
  CHECK(divisions > 100);

  LaurentPoly z(Var::s), one(Var::s);
  z.add(1, RatFun::constant(Var::s, Rational(1)));
  one.add(0, RatFun::constant(Var::s, Rational(1)));
  CHECK(!laurent_divide(z + one, z * z + one).has_value());
}

TEST_CASE("fractional indices divide through the rescaled image") {
  const RingTag tag = square_tag();
  const RatFun lam = RatFun::variable(Var::s);
  const TrigElement d = make_term(tag, TrigKind::C, Rational(1, 2), Rational(1));
  const TrigElement q = make_term(tag, TrigKind::S, Rational(3, 2), Rational(1));
  const auto back = laurent_exact_div(d * q, d, lam);
  REQUIRE(back.has_value());
  CHECK(*back == q);
}
