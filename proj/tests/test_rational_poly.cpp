#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <operant/errors.hpp>
#include <operant/roots.hpp>

#include <algorithm>
#include <complex>

using namespace operant;
using operant::test::Rng;

TEST_CASE("rational parsing and canonical text") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("+7/1") == Rational(7));
  CHECK(parse_rational("0/9") == Rational(0));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_string(parse_rational("100000000000000000001/3")) == "100000000000000000001/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rational sqrt recognizes perfect squares only") {
  CHECK(rational_sqrt(Rational(4, 9)) == Rational(2, 3));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK(rational_sqrt(Rational(49)) == Rational(7));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(4, 3)).has_value());
  CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("polynomial arithmetic oracles") {
  const Poly x = Poly::variable(Var::s);
  const Poly one = Poly::constant(Var::s, Rational(1));
  CHECK((x + one) * (x - one) == x * x - one);
  CHECK(Poly(Var::s, {Rational(1), Rational(2), Rational(1)}) == (x + one) * (x + one));
  CHECK(Poly(Var::s, {Rational(0), Rational(0)}).is_zero());
  CHECK((x.pow(3)).degree() == 3);
  CHECK((x * x).derivative() == x * Rational(2));
  CHECK(Poly::linear(Var::s, Rational(2), Rational(-1)).eval({0.5, 0.0}) ==
        std::complex<double>{0.0, 0.0});
}

TEST_CASE("euclidean division invariant on random pairs") {
  Rng rng(7001);
  for (int i = 0; i < 300; ++i) {
    const Poly p = operant::test::random_poly(rng, Var::s, 5);
    const Poly d = operant::test::random_nonzero_poly(rng, Var::s, 3);
    const auto [q, r] = p.divmod(d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("polynomial gcd and lcm") {
  const Poly x = Poly::variable(Var::s);
  const Poly one = Poly::constant(Var::s, Rational(1));
  const Poly a = (x + one) * (x + one) * (x - one * Rational(2));
  const Poly b = (x + one) * (x + one * Rational(3));
  CHECK(poly_gcd(a, b) == x + one);
  CHECK(poly_gcd(Poly::zero(Var::s), b) == b.monic());
  CHECK(poly_gcd(Poly::zero(Var::s), Poly::zero(Var::s)).is_zero());

  Rng rng(7002);
  for (int i = 0; i < 150; ++i) {
    const Poly p = operant::test::random_nonzero_poly(rng, Var::s, 3);
    const Poly q = operant::test::random_nonzero_poly(rng, Var::s, 3);
    const Poly g = poly_gcd(p, q);
    CHECK(p.divmod(g).second.is_zero());
    CHECK(q.divmod(g).second.is_zero());
    // g * lcm and p * q agree up to a constant.
    const Poly lhs = (g * poly_lcm(p, q)).monic();
    CHECK(lhs == (p * q).monic());
  }
}

TEST_CASE("root finder hits frozen spectra") {
  const Poly x = Poly::variable(Var::s);
  const Poly one = Poly::constant(Var::s, Rational(1));

  auto roots = find_roots(x * x + one);
  REQUIRE(roots.size() == 2);
  std::sort(roots.begin(), roots.end(),
            [](const auto& l, const auto& r) { return l.imag() < r.imag(); });
  CHECK(std::abs(roots[0] - std::complex<double>(0.0, -1.0)) < 1e-9);
  CHECK(std::abs(roots[1] - std::complex<double>(0.0, 1.0)) < 1e-9);

  // (s-1)(s-2)(s-3)(s+4)
  const Poly p = (x - one) * (x - one * Rational(2)) * (x - one * Rational(3)) *
                 (x + one * Rational(4));
  auto rs = find_roots(p);
  REQUIRE(rs.size() == 4);
  std::sort(rs.begin(), rs.end(), [](const auto& l, const auto& r) { return l.real() < r.real(); });
  const double expected[] = {-4.0, 1.0, 2.0, 3.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(rs[i].imag()) < 1e-9);
    CHECK(std::abs(rs[i].real() - expected[i]) < 1e-8);
  }

  const auto triple = find_roots((x - one).pow(3));
  REQUIRE(triple.size() == 3);
  for (const auto& r : triple) CHECK(std::abs(r - std::complex<double>(1.0, 0.0)) < 1e-4);
}
