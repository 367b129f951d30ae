#pragma once

#include <stdexcept>
#include <string>

namespace radii {

// Base for all library errors. Each subclass maps to one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad literal, dimension mismatch,
// unbounded H-description, lower-dimensional body where full dimension is
// required.
class InputError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a domain invariant (e.g. a gauge that is
// not centrally symmetric).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured cap (dimension, facet count, enumeration
// budget).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace radii
