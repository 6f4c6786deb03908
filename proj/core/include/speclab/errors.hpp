#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (t < 0, beyond a table, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The grid does not resolve the quantity being discretized.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Linear-algebra or quadrature failure (eigen clusters, resolvent at spectrum, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace speclab
