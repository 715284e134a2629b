#pragma once

#include <stdexcept>
#include <string>

namespace wpi {

// Malformed input: bad JSON, out-of-range indices, relations outside the
// allowed pattern set.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two entries of one row coincide, so a Gelfand-Tsetlin denominator vanishes.
class CriticalTableauError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A nonzero term lands on a tableau that satisfies the relations but lies
// outside the finite window being computed on.
class WindowOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation was called outside its domain (seed violating the relations,
// non-extremal triple for RR removal, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wpi
