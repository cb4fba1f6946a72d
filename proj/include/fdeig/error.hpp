#pragma once

#include <stdexcept>
#include <string>

namespace fdeig {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidBranch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

/// Raised when a smooth-potential-only operation meets a singular potential.
class SingularPotential : public Error {
 public:
  using Error::Error;
};

class ProblemFileError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdeig
