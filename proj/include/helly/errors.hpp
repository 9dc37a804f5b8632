#pragma once

#include <stdexcept>
#include <string>

namespace helly {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input file or text could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The feasible set has a nonzero recession direction.
class UnboundedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The body is not full-dimensional (or a point set does not span).
class DegenerateError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A point expected to be strictly interior is not.
class NotInteriorError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Floating-point trouble: pivoting stalled, an iteration cap was hit,
/// or a combinatorial cap would be exceeded.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A containment certificate failed its re-check beyond the allowed slack.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace helly
