#pragma once

#include <stdexcept>
#include <string>

namespace cvs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation produced a non-finite or inconsistent intermediate.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A covariance matrix does not have the block structure an operation needs.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Fock-basis truncation discarded more probability than allowed.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cvs
