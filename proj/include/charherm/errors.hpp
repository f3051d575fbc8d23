#ifndef CHARHERM_ERRORS_HPP_
#define CHARHERM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace charherm {

/// Argument outside the domain of an operation (CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on a pole of a gamma-type function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative evaluation hit its iteration cap (CLI exit code 2).
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace charherm

#endif  // CHARHERM_ERRORS_HPP_
