#pragma once

#include <operant/network.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace operant::cli {

// Exit code contract shared by every command:
//   0  success,
//   1  input problem (unreadable file, malformed JSON, failed validation,
//      mismatched tags, unsatisfied precondition),
//   2  numeric failure (residual or tolerance breach, non-convergence).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumeric = 2;

struct CommonOptions {
  std::string output;          // report destination; empty = stdout
  std::string format = "json"; // "json" | "text"
  int samples = 20;
  double tol = 1e-8;
  std::uint64_t seed = 20240917;
};

// Deterministic complex sample cloud for residual checks and rank scans,
// spread over a box away from the origin.
std::vector<std::complex<double>> sample_points(std::uint64_t seed, int n);

// Full pipeline on a network description file: validate, assemble at the
// chosen trace side, reduce, decompose, parametrize when free, scan ranks.
int cmd_analyze(const std::string& input_path, XiSide xi, const CommonOptions& opt,
                std::ostream& out, std::ostream& err);

// Bezout certificate for the ideal generated by two ring elements.
int cmd_gcd(const std::string& path_p, const std::string& path_q, const CommonOptions& opt,
            std::ostream& out, std::ostream& err);

// Entire-cofactor lift for two coprime elements with polynomial coefficients.
int cmd_lift(const std::string& path_p, const std::string& path_q, const CommonOptions& opt,
             std::ostream& out, std::ostream& err);

// Time-domain kernel validation for sigma = a s^2 + b s + c (a > 0: transform
// agreement + support table; a = 0: series agreement table).  Rationals are
// given as "p/q" strings.  csv_path, when nonempty, receives kernel samples;
// depth bounds the quadrature refinement (a small value forces a coarse grid).
int cmd_kernel_check(const std::string& a, const std::string& b, const std::string& c,
                     const std::string& csv_path, int depth, const CommonOptions& opt,
                     std::ostream& out, std::ostream& err);

}  // namespace operant::cli
