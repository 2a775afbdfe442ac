#pragma once

#include <stdexcept>
#include <string>

namespace crossvol {

// Every failure raised by the library derives from Error. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or index sets that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive computations refused because an enumeration cap is exceeded.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Singular systems, zero pivots, non-finite intermediate values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Requested rank is not below the numerical rank of the input.
class RankError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A complex extension could not be evaluated on an ellipse boundary.
class AnalyticityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// An operation was called on an input that violates its contract
// (wrong matrix class, incomplete pivot sequence, duplicate points).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Out-of-range scalar parameters (r <= 1, odd n where even is required).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Unknown names: bound kinds, gallery families, verification suites.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed matrix text files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace crossvol
