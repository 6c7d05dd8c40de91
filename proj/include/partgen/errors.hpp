#pragma once

#include <stdexcept>

namespace partgen {

// Argument outside the mathematical domain of an operation (n < 1, a leaf
// where an internal node is required, a malformed path, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument inside the domain but beyond a configured size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace partgen
