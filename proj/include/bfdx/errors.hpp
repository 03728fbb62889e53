#pragma once

#include <stdexcept>
#include <string>

namespace bfdx {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a precondition (x <= 0 for ln_gamma, theta outside
// (0,1), a malformed interval, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// find_root was handed a bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

// An iterative routine exhausted its budget without meeting tolerance.
// Never a silent wrong value.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The requested quantity does not exist for these inputs (e.g. no sample
// mean achieves the target Bayes factor). At the CLI this is reported as
// data, not as a usage error.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace bfdx
