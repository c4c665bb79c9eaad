#include "operant/json_io.hpp"

#include "operant/errors.hpp"

#include <json.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

namespace operant {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void expect_object(const json& node, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!node.is_object()) fail(path, "expected an object");
  for (auto it = node.begin(); it != node.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

const json& require(const json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

Rational rational_from(const json& node, const std::string& path) {
  try {
    if (node.is_string()) return parse_rational(node.get<std::string>());
    if (node.is_number_integer()) return Rational(node.get<long long>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational as \"p/q\" string or integer");
}

json rational_to(const Rational& r) { return json(to_string(r)); }

json poly_to(const Poly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to(c));
  return json{{"var", var_name(p.var())}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from(const json& node, const std::string& path) {
  expect_object(node, path, {"var", "coeffs"});
  const json& vnode = require(node, "var", path);
  if (!vnode.is_string()) fail(path + ".var", "expected \"s\" or \"sigma\"");
  Var var;
  try {
    var = parse_var(vnode.get<std::string>());
  } catch (const ParseError& e) {
    fail(path + ".var", e.what());
  }
  const json& cnode = require(node, "coeffs", path);
  if (!cnode.is_array()) fail(path + ".coeffs", "expected an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(cnode.size());
  for (size_t i = 0; i < cnode.size(); ++i)
    coeffs.push_back(rational_from(cnode[i], path + ".coeffs[" + std::to_string(i) + "]"));
  return Poly(var, std::move(coeffs));
}

json ratfun_to(const RatFun& f) {
  json out{{"num", poly_to(f.num())}};
  if (!f.den().is_constant()) out["den"] = poly_to(f.den());
  return out;
}

// Accepts {"num":..., "den":...} or, when the base variable is known from
// context, the "p/q" constant shorthand.
RatFun ratfun_from(const json& node, const std::string& path, std::optional<Var> context_var) {
  if (node.is_string() || node.is_number_integer()) {
    if (!context_var) fail(path, "constant shorthand needs an enclosing variable context");
    return RatFun::constant(*context_var, rational_from(node, path));
  }
  expect_object(node, path, {"num", "den"});
  const Poly num = poly_from(require(node, "num", path), path + ".num");
  if (!node.contains("den")) return RatFun::from_poly(num);
  const Poly den = poly_from(node["den"], path + ".den");
  if (den.is_zero()) fail(path + ".den", "zero denominator");
  return RatFun(num, den);
}

json sigma_to(const SigmaSpec& s) {
  if (s.is_indeterminate()) return json{{"mode", "indeterminate"}};
  return json{{"mode", "polynomial"},
              {"a", rational_to(s.a())},
              {"b", rational_to(s.b())},
              {"c", rational_to(s.c())}};
}

SigmaSpec sigma_from(const json& node, const std::string& path) {
  expect_object(node, path, {"mode", "a", "b", "c"});
  const json& mnode = require(node, "mode", path);
  if (!mnode.is_string()) fail(path + ".mode", "expected a string");
  const std::string mode = mnode.get<std::string>();
  if (mode == "indeterminate") {
    for (const char* k : {"a", "b", "c"})
      if (node.contains(k)) fail(path, std::string("key \"") + k + "\" invalid in indeterminate mode");
    return SigmaSpec::indeterminate();
  }
  if (mode != "polynomial") fail(path + ".mode", "expected \"indeterminate\" or \"polynomial\"");
  auto coeff = [&](const char* k) {
    return node.contains(k) ? rational_from(node[k], path + "." + k) : Rational(0);
  };
  try {
    return SigmaSpec::polynomial(coeff("a"), coeff("b"), coeff("c"));
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

json tag_to(const RingTag& t) {
  return json{{"sigma", sigma_to(t.sigma)}, {"ell", rational_to(t.ell)}};
}

RingTag tag_from(const json& node, const std::string& path) {
  expect_object(node, path, {"sigma", "ell"});
  RingTag tag{sigma_from(require(node, "sigma", path), path + ".sigma"), Rational(1)};
  if (node.contains("ell")) {
    tag.ell = rational_from(node["ell"], path + ".ell");
    if (tag.ell <= 0) fail(path + ".ell", "length scale must be positive");
  }
  return tag;
}

json terms_to(const TrigElement& e) {
  json terms = json::array();
  for (const auto& [alpha, pair] : e.terms()) {
    json term{{"index", rational_to(alpha)}};
    if (!pair.c.is_zero()) term["c"] = ratfun_to(pair.c);
    if (!pair.s.is_zero()) term["s"] = ratfun_to(pair.s);
    terms.push_back(std::move(term));
  }
  return terms;
}

TrigElement terms_from(const json& node, const RingTag& tag, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of terms");
  TrigElement e(tag);
  for (size_t i = 0; i < node.size(); ++i) {
    const std::string tpath = path + "[" + std::to_string(i) + "]";
    const json& term = node[i];
    expect_object(term, tpath, {"index", "c", "s"});
    const Rational alpha = rational_from(require(term, "index", tpath), tpath + ".index");
    if (term.contains("c"))
      e.accumulate(TrigKind::C, alpha, ratfun_from(term["c"], tpath + ".c", tag.var()));
    if (term.contains("s"))
      e.accumulate(TrigKind::S, alpha, ratfun_from(term["s"], tpath + ".s", tag.var()));
  }
  return e;
}

json trig_to(const TrigElement& e) {
  return json{{"tag", tag_to(e.tag())}, {"terms", terms_to(e)}};
}

TrigElement trig_from(const json& node, const std::string& path) {
  expect_object(node, path, {"tag", "terms"});
  const RingTag tag = tag_from(require(node, "tag", path), path + ".tag");
  return terms_from(require(node, "terms", path), tag, path + ".terms");
}

Vec2Q vec2_from(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) fail(path, "expected an array of 2 rationals");
  return Vec2Q{rational_from(node[0], path + "[0]"), rational_from(node[1], path + "[1]")};
}

Mat2Q mat2_from(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) fail(path, "expected a 2x2 array of rationals");
  Mat2Q m{};
  for (size_t i = 0; i < 2; ++i) {
    const std::string rpath = path + "[" + std::to_string(i) + "]";
    if (!node[i].is_array() || node[i].size() != 2) fail(rpath, "expected an array of 2 rationals");
    for (size_t j = 0; j < 2; ++j)
      m[i][j] = rational_from(node[i][j], rpath + "[" + std::to_string(j) + "]");
  }
  return m;
}

json vec2_to(const Vec2Q& v) { return json::array({rational_to(v[0]), rational_to(v[1])}); }

json mat2_to(const Mat2Q& m) {
  return json::array({vec2_to({m[0][0], m[0][1]}), vec2_to({m[1][0], m[1][1]})});
}

std::vector<Vec2Q> columns_from(const json& node, const std::string& path, size_t expected) {
  if (!node.is_array()) fail(path, "expected an array of input columns");
  std::vector<Vec2Q> cols;
  cols.reserve(node.size());
  for (size_t i = 0; i < node.size(); ++i)
    cols.push_back(vec2_from(node[i], path + "[" + std::to_string(i) + "]"));
  if (cols.size() != expected)
    fail(path, "expected " + std::to_string(expected) + " input column(s), got " +
                   std::to_string(cols.size()));
  return cols;
}

std::string dump(const json& node, int indent) { return node.dump(indent < 0 ? -1 : indent); }

}  // namespace

std::string poly_to_json(const Poly& p, int indent) { return dump(poly_to(p), indent); }

Poly poly_from_json(const std::string& text) { return poly_from(parse_root(text), "$"); }

std::string ratfun_to_json(const RatFun& f, int indent) { return dump(ratfun_to(f), indent); }

RatFun ratfun_from_json(const std::string& text) {
  return ratfun_from(parse_root(text), "$", std::nullopt);
}

std::string sigma_to_json(const SigmaSpec& s, int indent) { return dump(sigma_to(s), indent); }

SigmaSpec sigma_from_json(const std::string& text) { return sigma_from(parse_root(text), "$"); }

std::string tag_to_json(const RingTag& t, int indent) { return dump(tag_to(t), indent); }

RingTag tag_from_json(const std::string& text) { return tag_from(parse_root(text), "$"); }

std::string trig_to_json(const TrigElement& e, int indent) { return dump(trig_to(e), indent); }

TrigElement trig_from_json(const std::string& text) { return trig_from(parse_root(text), "$"); }

std::string matrix_to_json(const RingMatrix& m, int indent) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(terms_to(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return dump(json{{"tag", tag_to(m.tag())}, {"entries", std::move(rows)}}, indent);
}

RingMatrix matrix_from_json(const std::string& text) {
  const json node = parse_root(text);
  expect_object(node, "$", {"tag", "entries"});
  const RingTag tag = tag_from(require(node, "tag", "$"), "$.tag");
  const json& rows = require(node, "entries", "$");
  if (!rows.is_array() || rows.empty()) fail("$.entries", "expected a nonempty array of rows");
  const size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
  if (ncols == 0) fail("$.entries[0]", "expected a nonempty array of entries");
  RingMatrix m(tag, rows.size(), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    const std::string rpath = "$.entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != ncols) fail(rpath, "ragged row");
    for (size_t j = 0; j < ncols; ++j)
      m.at(i, j) = terms_from(rows[i][j], tag, rpath + "[" + std::to_string(j) + "]");
  }
  return m;
}

std::string network_to_json(const NetworkSpec& spec, int indent) {
  json branches = json::array();
  for (const Branch& b : spec.branches) {
    json cols_b = json::array(), cols_i = json::array();
    for (const Vec2Q& v : b.boundary_input) cols_b.push_back(vec2_to(v));
    for (const Vec2Q& v : b.interior_input) cols_i.push_back(vec2_to(v));
    branches.push_back(json{{"length", rational_to(b.length)},
                            {"left", mat2_to(b.left)},
                            {"right", mat2_to(b.right)},
                            {"boundary_input", std::move(cols_b)},
                            {"interior_input", std::move(cols_i)}});
  }
  return dump(json{{"sigma", sigma_to(spec.sigma)},
                   {"num_inputs", spec.num_inputs},
                   {"branches", std::move(branches)}},
              indent);
}

NetworkSpec network_from_json(const std::string& text) {
  const json node = parse_root(text);
  expect_object(node, "$", {"sigma", "num_inputs", "branches"});
  NetworkSpec spec;
  spec.sigma = sigma_from(require(node, "sigma", "$"), "$.sigma");
  const json& ninp = require(node, "num_inputs", "$");
  if (!ninp.is_number_unsigned()) fail("$.num_inputs", "expected a nonnegative integer");
  spec.num_inputs = ninp.get<size_t>();
  const json& branches = require(node, "branches", "$");
  if (!branches.is_array()) fail("$.branches", "expected an array");
  for (size_t i = 0; i < branches.size(); ++i) {
    const std::string bpath = "$.branches[" + std::to_string(i) + "]";
    const json& bn = branches[i];
    // Only the trace-coupling shape below is representable; any extra
    // coupling key (pointwise feedback, delayed terms, ...) is rejected here.
    expect_object(bn, bpath, {"length", "left", "right", "boundary_input", "interior_input"});
    Branch b;
    b.length = rational_from(require(bn, "length", bpath), bpath + ".length");
    b.left = mat2_from(require(bn, "left", bpath), bpath + ".left");
    b.right = mat2_from(require(bn, "right", bpath), bpath + ".right");
    b.boundary_input =
        bn.contains("boundary_input")
            ? columns_from(bn["boundary_input"], bpath + ".boundary_input", spec.num_inputs)
            : std::vector<Vec2Q>(spec.num_inputs, Vec2Q{Rational(0), Rational(0)});
    b.interior_input =
        bn.contains("interior_input")
            ? columns_from(bn["interior_input"], bpath + ".interior_input", spec.num_inputs)
            : std::vector<Vec2Q>(spec.num_inputs, Vec2Q{Rational(0), Rational(0)});
    spec.branches.push_back(std::move(b));
  }
  try {
    validate(spec);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  return spec;
}

std::string certificate_to_json(const BezoutCertificate& cert, int indent) {
  json trail = json::array();
  for (const RingMat2& m : cert.trail)
    trail.push_back(json{{"m00", terms_to(m.m00)},
                         {"m01", terms_to(m.m01)},
                         {"m10", terms_to(m.m10)},
                         {"m11", terms_to(m.m11)}});
  return dump(json{{"tag", tag_to(cert.g.tag())},
                   {"g", terms_to(cert.g)},
                   {"cofactor_a", terms_to(cert.cofactor_a)},
                   {"cofactor_b", terms_to(cert.cofactor_b)},
                   {"trail", std::move(trail)}},
              indent);
}

ElementPair element_pair_from_json(const std::string& text) {
  const json node = parse_root(text);
  expect_object(node, "$", {"tag", "p", "q"});
  const RingTag tag = tag_from(require(node, "tag", "$"), "$.tag");
  return ElementPair{terms_from(require(node, "p", "$"), tag, "$.p"),
                     terms_from(require(node, "q", "$"), tag, "$.q")};
}

}  // namespace operant
