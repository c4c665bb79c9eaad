#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace operant::cli;
using json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  return std::string(OPERANT_FIXTURE_DIR) + "/" + name;
}

struct Run {
  int code;
  json report;
  std::string err;
};

json parse_or_null(const std::string& text) {
  return text.empty() ? json() : json::parse(text);
}

Run run_analyze(const std::string& path, operant::XiSide xi, CommonOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_analyze(path, xi, opt, out, err);
  return Run{code, parse_or_null(out.str()), err.str()};
}

Run run_gcd(const std::string& p, const std::string& q, CommonOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_gcd(p, q, opt, out, err);
  return Run{code, parse_or_null(out.str()), err.str()};
}

Run run_lift(const std::string& p, const std::string& q, CommonOptions opt = {}) {
  std::ostringstream out, err;
  const int code = cmd_lift(p, q, opt, out, err);
  return Run{code, parse_or_null(out.str()), err.str()};
}

Run run_kernel(const std::string& a, const std::string& b, const std::string& c, int depth,
               CommonOptions opt) {
  std::ostringstream out, err;
  const int code = cmd_kernel_check(a, b, c, "", depth, opt, out, err);
  return Run{code, parse_or_null(out.str()), err.str()};
}

// Drops volatile fields so two runs of the same command can be compared.
void strip_timings(json& node) {
  if (node.is_object()) {
    node.erase("timing_ms");
    for (auto& [key, value] : node.items()) strip_timings(value);
  } else if (node.is_array()) {
    for (auto& value : node) strip_timings(value);
  }
}

std::string write_temp(const std::string& contents) {
  static int counter = 0;
  const std::string path = "cli_tmp_" + std::to_string(counter++) + ".json";
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("pair certificate command succeeds on the half-angle pair") {
  const Run r = run_gcd(fixture("s1.json"), fixture("c1_plus_1.json"));
  CHECK(r.code == kExitOk);
  CHECK(r.report.at("status") == "ok");
  CHECK(r.report.at("schema_version") == 1);
  CHECK(r.report.at("command") == "gcd");
  const json& payload = r.report.at("payload");
  CHECK(payload.at("verified") == true);
  CHECK(payload.at("unit") == false);
}

TEST_CASE("input problems exit with code 1 and a diagnostic") {
  const std::string corrupt = write_temp("{ \"tag\": ");
  const Run r = run_gcd(corrupt, fixture("s1.json"));
  CHECK(r.code == kExitInput);
  CHECK(r.report.at("status") == "error");
  CHECK(!r.report.at("message").get<std::string>().empty());
  CHECK(r.err.find("error:") != std::string::npos);
  std::remove(corrupt.c_str());

  const Run missing = run_gcd("does_not_exist.json", fixture("s1.json"));
  CHECK(missing.code == kExitInput);

  // Elements over different rings must not combine.
  const Run mismatch = run_gcd(fixture("s1.json"), fixture("c1_plus_1_square.json"));
  CHECK(mismatch.code == kExitInput);
  CHECK(mismatch.report.at("status") == "error");
}

TEST_CASE("analysis of the two-branch example is controllable") {
  const Run r = run_analyze(fixture("two_branch.json"), operant::XiSide::right);
  CHECK(r.code == kExitOk);
  const json& payload = r.report.at("payload");
  const json& verdicts = payload.at("verdicts");
  CHECK(verdicts.at("torsion_free") == true);
  CHECK(verdicts.at("free") == true);
  CHECK(verdicts.at("spectrally_controllable") == true);
  CHECK(verdicts.at("trajectory_controllable") == true);
  CHECK(verdicts.at("behaviorally_controllable") == true);
  CHECK(payload.at("free_rank") == 1);
  CHECK(payload.at("residuals").at("reconstruction_max").get<double>() < 1e-8);
}

TEST_CASE("torsion verdict omits the controllability labels") {
  const Run r = run_analyze(fixture("pinned_torsion.json"), operant::XiSide::right);
  CHECK(r.code == kExitOk);
  const json& payload = r.report.at("payload");
  const json& verdicts = payload.at("verdicts");
  CHECK(verdicts.at("torsion_free") == false);
  CHECK(!verdicts.contains("trajectory_controllable"));
  CHECK(!verdicts.contains("behaviorally_controllable"));
  REQUIRE(payload.at("torsion_invariants").size() == 1);
  CHECK(payload.at("flat_output").contains("refused"));
  REQUIRE(payload.at("rank_drop_points").size() >= 1);
  bool near_pi2 = false;
  for (const auto& z : payload.at("rank_drop_points"))
    if (std::abs(z.get<double>() + 9.869604401089358) < 1e-6) near_pi2 = true;
  CHECK(near_pi2);
}

TEST_CASE("analysis rejects invalid networks at parse time") {
  CHECK(run_analyze(fixture("sigma_zero.json"), operant::XiSide::right).code == kExitInput);
  CHECK(run_analyze(fixture("generalized_coupling.json"), operant::XiSide::right).code ==
        kExitInput);
}

TEST_CASE("trace side does not change the verdicts") {
  for (const char* name : {"two_branch.json", "pinned_torsion.json"}) {
    const Run left = run_analyze(fixture(name), operant::XiSide::left);
    const Run right = run_analyze(fixture(name), operant::XiSide::right);
    REQUIRE(left.code == kExitOk);
    REQUIRE(right.code == kExitOk);
    CHECK(left.report.at("payload").at("verdicts") == right.report.at("payload").at("verdicts"));
    CHECK(left.report.at("payload").at("free_rank") ==
          right.report.at("payload").at("free_rank"));
  }
}

TEST_CASE("lift command reports the entire identity") {
  const Run r = run_lift(fixture("p1.json"), fixture("p2.json"));
  CHECK(r.code == kExitOk);
  const json& payload = r.report.at("payload");
  CHECK(payload.at("coprime") == true);
  CHECK(payload.at("residual_max").get<double>() < 1e-8);
  REQUIRE(payload.at("removable_points").size() == 1);
  const json& root = payload.at("removable_points")[0];
  CHECK(std::abs(root[0].get<double>() - 0.35) < 1e-12);
  CHECK(std::abs(root[1].get<double>()) < 1e-12);
}

TEST_CASE("lift refuses non-coprime pairs without attempting") {
  const Run r = run_lift(fixture("s1_square.json"), fixture("c1_plus_1_square.json"));
  CHECK(r.code == kExitInput);
  CHECK(r.report.at("status") == "error");
  CHECK(r.report.at("payload").at("coprime") == false);
  CHECK(r.report.at("payload").contains("gcd"));
}

TEST_CASE("kernel check passes at defaults and fails a forced-coarse tolerance") {
  CommonOptions opt;
  opt.tol = 1e-6;
  const Run ok = run_kernel("1", "0", "0", 28, opt);
  CHECK(ok.code == kExitOk);
  CHECK(ok.report.at("payload").at("all_pass") == true);
  CHECK(ok.report.at("payload").at("support_violations") == 0);

  CommonOptions tight;
  tight.tol = 1e-12;
  const Run fail = run_kernel("1", "0", "0", 4, tight);
  CHECK(fail.code == kExitNumeric);
  CHECK(fail.report.at("status") == "FAILED");

  CommonOptions series;
  series.tol = 1e-6;
  const Run heat = run_kernel("0", "1", "0", 28, series);
  CHECK(heat.code == kExitOk);
  CHECK(heat.report.at("payload").at("mode") == "series");
}

TEST_CASE("reports are deterministic for a fixed seed") {
  CommonOptions opt;
  opt.seed = 424242;
  const Run a = run_analyze(fixture("two_branch.json"), operant::XiSide::right, opt);
  const Run b = run_analyze(fixture("two_branch.json"), operant::XiSide::right, opt);
  json ja = a.report, jb = b.report;
  strip_timings(ja);
  strip_timings(jb);
  CHECK(ja == jb);

  CommonOptions other = opt;
  other.seed = 99;
  const Run c = run_analyze(fixture("two_branch.json"), operant::XiSide::right, other);
  json jc = c.report;
  strip_timings(jc);
  CHECK(jc.at("payload").at("verdicts") == ja.at("payload").at("verdicts"));
}

TEST_CASE("output file and text format") {
  CommonOptions opt;
  opt.output = "cli_tmp_report.json";
  const Run r = run_gcd(fixture("s1.json"), fixture("c1_plus_1.json"), opt);
  CHECK(r.code == kExitOk);
  std::ifstream in(opt.output);
  REQUIRE(in.good());
  json from_file;
  in >> from_file;
  CHECK(from_file.at("status") == "ok");
  std::remove(opt.output.c_str());

  CommonOptions text;
  text.format = "text";
  std::ostringstream out, err;
  const int code = cmd_gcd(fixture("s1.json"), fixture("c1_plus_1.json"), text, out, err);
  CHECK(code == kExitOk);
  CHECK(out.str().find("command:") != std::string::npos);
  CHECK(out.str().find("status:") != std::string::npos);
}
