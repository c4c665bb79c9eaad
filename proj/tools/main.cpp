#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_common(CLI::App* cmd, operant::cli::CommonOptions& opt) {
  cmd->add_option("--output", opt.output, "Write the report to this file instead of stdout");
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--samples", opt.samples, "Number of seeded sample points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", opt.tol, "Numeric tolerance")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "Sample point seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact controllability analysis for boundary-coupled second-order networks"};
  app.require_subcommand(1);

  std::string input, path_p, path_q, xi = "right";
  std::string ka = "1", kb = "0", kc = "0", csv;
  int depth = 28;

  operant::cli::CommonOptions a_opt, g_opt, l_opt, k_opt;
  k_opt.tol = 1e-6;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a network description file");
  analyze->add_option("--input", input, "Network description (JSON)")->required();
  analyze->add_option("--xi", xi, "Trace side")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  add_common(analyze, a_opt);

  CLI::App* gcd = app.add_subcommand("gcd", "Bezout certificate for two ring elements");
  gcd->add_option("p", path_p, "First element (JSON file)")->required();
  gcd->add_option("q", path_q, "Second element (JSON file)")->required();
  add_common(gcd, g_opt);

  CLI::App* lift = app.add_subcommand("lift", "Entire-cofactor lift for two coprime elements");
  lift->add_option("p", path_p, "First element (JSON file)")->required();
  lift->add_option("q", path_q, "Second element (JSON file)")->required();
  add_common(lift, l_opt);

  CLI::App* kernel = app.add_subcommand("kernel-check", "Validate the time-domain kernel");
  kernel->add_option("--a", ka, "Coefficient a of sigma = a s^2 + b s + c")->capture_default_str();
  kernel->add_option("--b", kb, "Coefficient b")->capture_default_str();
  kernel->add_option("--c", kc, "Coefficient c")->capture_default_str();
  kernel->add_option("--csv", csv, "Write kernel samples to this CSV file");
  kernel->add_option("--depth", depth, "Quadrature refinement depth (small = coarse grid)")
      ->check(CLI::Range(0, 40))
      ->capture_default_str();
  add_common(kernel, k_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? operant::cli::kExitOk : operant::cli::kExitInput;
  }

  using namespace operant::cli;
  if (analyze->parsed())
    return cmd_analyze(input, xi == "left" ? operant::XiSide::left : operant::XiSide::right, a_opt,
                       std::cout, std::cerr);
  if (gcd->parsed()) return cmd_gcd(path_p, path_q, g_opt, std::cout, std::cerr);
  if (lift->parsed()) return cmd_lift(path_p, path_q, l_opt, std::cout, std::cerr);
  if (kernel->parsed())
    return cmd_kernel_check(ka, kb, kc, csv, depth, k_opt, std::cout, std::cerr);
  return kExitInput;
}
