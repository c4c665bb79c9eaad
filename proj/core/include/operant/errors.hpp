#pragma once

#include <stdexcept>
#include <string>

namespace operant {

/* Error taxonomy.
 *
 * TagMismatchError   : operands built over different base variables / sigma specs.
 * PoleError          : numeric evaluation hit a denominator zero.
 * RootFindingError   : eigenvalue + Newton polish failed to meet the residual bound.
 * PreconditionError  : an operation was called outside its stated domain.
 * DegenerateRootError: a lift step found both operands vanishing at a shared root.
 * NumericError       : a numeric certificate (quadrature, residual) failed to converge.
 * ParseError         : malformed JSON or textual input.
 */

struct TagMismatchError : std::invalid_argument {
  explicit TagMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindingError : std::runtime_error {
  explicit RootFindingError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateRootError : std::runtime_error {
  explicit DegenerateRootError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace operant
