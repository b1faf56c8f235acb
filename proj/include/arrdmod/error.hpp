#pragma once

#include <stdexcept>
#include <string>

namespace arrdmod {

// Base of every error the library raises. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatches, zero normals, duplicate
// hyperplanes, unparsable rationals, length mismatches.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition, e.g.
// asking for decomposition factors of a non-normal-crossing arrangement.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation only defined in the plane (n = 2).
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrdmod
