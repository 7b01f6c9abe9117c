#pragma once

#include <stdexcept>
#include <string>

namespace ncinv {

/// Malformed or inconsistent caller input (bad files, violated preconditions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured budget (element count, prime search, search nodes) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero and similar field-level failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant the library maintains itself was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncinv
