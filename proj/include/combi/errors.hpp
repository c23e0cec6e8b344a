#pragma once

#include <stdexcept>

namespace combi {

// Malformed or out-of-domain arguments (arity mismatch, p > n, negative weight).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a hard enumeration cap (e.g. more than 20 sets).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independent computations of the same quantity disagreed. Never expected.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace combi
