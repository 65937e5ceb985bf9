#pragma once

#include <stdexcept>
#include <string>

namespace stratakit {

// A precondition of a library operation was violated by its inputs.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured size bound.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace stratakit
