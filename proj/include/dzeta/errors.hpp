#pragma once

#include <stdexcept>
#include <string>

namespace dzeta {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of the function being evaluated.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the region where the requested formula is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument within the exclusion radius of the singular locus of zeta_2.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A vertical integration path meets the singular locus.
class SingularPathError : public SingularError {
 public:
  using SingularError::SingularError;
};

/// Requested tolerance not reached within the configured cutoffs.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Too few data points for a fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace dzeta
