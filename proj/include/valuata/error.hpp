#pragma once

#include <stdexcept>
#include <string>

namespace valuata {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller misuse: mixed groups, malformed input, unsupported configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by an exact zero or a non-invertible residue.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The element has no known terms below its precision; only a lower bound on
/// its valuation is available.
class ZeroToPrecision : public Error {
 public:
  using Error::Error;
};

/// A decision needs data that has been truncated away.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a non-trivial extension was handed a trivial one,
/// or a non-generator, or an element fixed by the Galois action.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity or theorem-level inequality failed. These indicate
/// a bug (or a precision defect), never a user error.
class MathAssertion : public Error {
 public:
  using Error::Error;
};

}  // namespace valuata
