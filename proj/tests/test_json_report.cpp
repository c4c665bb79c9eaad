#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <operant/errors.hpp>
#include <operant/json_io.hpp>
#include <operant/report.hpp>

#include <fstream>
#include <sstream>
#include <string>

using namespace operant;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture(const std::string& name) {
  return std::string(OPERANT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("polynomial and rational-function round trips") {
  const Poly p(Var::s, {Rational(1, 2), Rational(0), Rational(-3)});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(poly_to_json(p, 2)) == p);

  const RatFun f(Poly(Var::sigma, {Rational(1), Rational(1)}),
                 Poly(Var::sigma, {Rational(-2), Rational(0), Rational(1)}));
  CHECK(ratfun_from_json(ratfun_to_json(f)) == f);

  // Constant functions serialize without a denominator and accept shorthand
  // only where the variable is known from context, not at top level.
  const RatFun c = RatFun::constant(Var::s, Rational(7, 3));
  const std::string cj = ratfun_to_json(c);
  CHECK(cj.find("den") == std::string::npos);
  CHECK(ratfun_from_json(cj) == c);
  CHECK_THROWS_AS(ratfun_from_json("\"7/3\""), ParseError);
}

TEST_CASE("sigma and tag round trips in both modes") {
  const SigmaSpec ind = SigmaSpec::indeterminate();
  CHECK(sigma_from_json(sigma_to_json(ind)) == ind);
  const SigmaSpec poly = SigmaSpec::polynomial(Rational(1), Rational(1, 2), Rational(0));
  CHECK(sigma_from_json(sigma_to_json(poly)) == poly);
  CHECK_THROWS_AS(sigma_from_json(R"({"mode":"indeterminate","a":"1"})"), ParseError);
  CHECK_THROWS_AS(sigma_from_json(R"({"mode":"polynomial","a":"0","b":"0","c":"0"})"),
                  ParseError);

  RingTag tag{poly, Rational(3, 2)};
  CHECK(tag_from_json(tag_to_json(tag)) == tag);
  CHECK_THROWS_AS(tag_from_json(R"({"sigma":{"mode":"indeterminate"},"ell":"0"})"), ParseError);
}

TEST_CASE("ring element round trip keeps fractional indices and s-only terms") {
  const RingTag tag{SigmaSpec::indeterminate(), Rational(1)};
  TrigElement e = TrigElement::zero(tag);
  e.accumulate(TrigKind::S, Rational(1, 2), RatFun::constant(Var::sigma, Rational(4)));
  e.accumulate(TrigKind::C, Rational(3),
               RatFun(Poly(Var::sigma, {Rational(0), Rational(1)}),
                      Poly(Var::sigma, {Rational(1), Rational(1)})));
  CHECK(trig_from_json(trig_to_json(e)) == e);
  CHECK(trig_from_json(trig_to_json(e, 2)) == e);

  // Integer literals are accepted wherever rational strings are.
  const std::string doc = R"({
    "tag": {"sigma": {"mode": "indeterminate"}},
    "terms": [{"index": 1, "c": 2, "s": 1}]
  })";
  const TrigElement parsed = trig_from_json(doc);
  CHECK(parsed.coeff(TrigKind::C, Rational(1)) == RatFun::constant(Var::sigma, Rational(2)));
  CHECK(parsed.coeff(TrigKind::S, Rational(1)) == RatFun::constant(Var::sigma, Rational(1)));
}

TEST_CASE("matrix round trip and shape validation") {
  const RingTag tag{SigmaSpec::polynomial(Rational(1), Rational(0), Rational(0)), Rational(1)};
  RingMatrix m(tag, 2, 3);
  m.at(0, 0) = TrigElement::one(tag);
  m.at(1, 2) = make_term(tag, TrigKind::S, Rational(2), Rational(-5));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);

  CHECK_THROWS_AS(matrix_from_json(R"({"tag":{"sigma":{"mode":"indeterminate"}},"entries":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(
          R"({"tag":{"sigma":{"mode":"indeterminate"}},"entries":[[[]],[[],[]]]})"),
      ParseError);
}

TEST_CASE("network round trip") {
  NetworkSpec spec;
  spec.sigma = SigmaSpec::indeterminate();
  spec.num_inputs = 1;
  Branch b;
  b.length = Rational(2);
  b.left = Mat2Q{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
  b.right = Mat2Q{{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}}};
  b.boundary_input = {Vec2Q{Rational(0), Rational(-1)}};
  b.interior_input = {Vec2Q{Rational(1, 3), Rational(0)}};
  spec.branches = {b};
  const NetworkSpec back = network_from_json(network_to_json(spec, 2));
  REQUIRE(back.branches.size() == 1);
  CHECK(back.num_inputs == 1);
  CHECK(back.branches[0].length == Rational(2));
  CHECK(back.branches[0].left == b.left);
  CHECK(back.branches[0].right == b.right);
  CHECK(back.branches[0].boundary_input == b.boundary_input);
  CHECK(back.branches[0].interior_input == b.interior_input);
}

TEST_CASE("unknown keys are rejected with their path") {
  const std::string doc = R"({
    "sigma": {"mode": "indeterminate"},
    "num_inputs": 0,
    "branches": [{
      "length": "1",
      "left": [["1","0"],["0","0"]],
      "right": [["0","0"],["1","0"]],
      "pointwise_feedback": [["1","0"],["0","0"]]
    }]
  })";
  try {
    network_from_json(doc);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("pointwise_feedback") != std::string::npos);
    CHECK(what.find("branches[0]") != std::string::npos);
  }
  CHECK_THROWS_AS(sigma_from_json(R"({"mode":"indeterminate","extra":1})"), ParseError);
  CHECK_THROWS_AS(trig_from_json(
                      R"({"tag":{"sigma":{"mode":"indeterminate"}},"terms":[],"note":"x"})"),
                  ParseError);
}

TEST_CASE("malformed documents raise ParseError not crashes") {
  CHECK_THROWS_AS(network_from_json("{ not json"), ParseError);
  CHECK_THROWS_AS(trig_from_json("[]"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"var":"t","coeffs":[]})"), ParseError);
  CHECK_THROWS_AS(ratfun_from_json(R"({"num":{"var":"s","coeffs":["1"]},"den":{"var":"s","coeffs":["0"]}})"),
                  ParseError);
  CHECK_THROWS_AS(trig_from_json(
                      R"({"tag":{"sigma":{"mode":"indeterminate"}},"terms":[{"index":"1","c":"1/0"}]})"),
                  ParseError);
}

TEST_CASE("shipped input documents parse") {
  const NetworkSpec two = network_from_json(slurp(fixture("two_branch.json")));
  CHECK(two.branches.size() == 2);
  CHECK(two.num_inputs == 1);
  CHECK(two.sigma.is_indeterminate());

  const NetworkSpec pinned = network_from_json(slurp(fixture("pinned_torsion.json")));
  CHECK(pinned.branches.size() == 1);
  CHECK(pinned.num_inputs == 0);

  const TrigElement s1 = trig_from_json(slurp(fixture("s1.json")));
  CHECK(s1.norm() == Rational(1));

  CHECK_THROWS_AS(network_from_json(slurp(fixture("sigma_zero.json"))), ParseError);
  CHECK_THROWS_AS(network_from_json(slurp(fixture("generalized_coupling.json"))), ParseError);
}

TEST_CASE("report envelope embeds the payload as structure") {
  Report rep;
  rep.command = "gcd";
  rep.status = "ok";
  rep.message = "done";
  rep.payload_json = R"({"unit": true, "count": 3})";
  const std::string text = render_report(rep);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("\"payload\"") != std::string::npos);
  CHECK(text.find("\"unit\": true") != std::string::npos);
  // The payload must be a JSON subtree, not an escaped string.
  CHECK(text.find("\\\"unit\\\"") == std::string::npos);

  Report bad = rep;
  bad.payload_json = "{ nope";
  CHECK_THROWS_AS(render_report(bad), ParseError);

  Report empty = rep;
  empty.payload_json.clear();
  const std::string etext = render_report(empty);
  CHECK(etext.find("\"payload\"") == std::string::npos);
}
