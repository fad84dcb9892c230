#pragma once

#include <stdexcept>
#include <string>

namespace hlip {

// Argument outside the mathematical domain of an operation (p < 1, nu <= -1, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Inconsistent or invalid construction parameters.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A hypothesis required by a verifier does not hold numerically.
struct precondition_error : std::runtime_error {
  precondition_error(std::string cond, const std::string& what)
      : std::runtime_error(what), condition(std::move(cond)) {}
  std::string condition;
};

// Non-finite value produced by a user supplied evaluator.
struct evaluation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hlip
