#pragma once

#include <stdexcept>
#include <string>

namespace subsmooth {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The common 1-eigenspace is trivial, or its complement is not M-invariant:
// the scheme cannot be convergent.
class EmptyEigenspace : public Error {
 public:
  using Error::Error;
};

// A required algebraic condition on a mask does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// β*₁₁(1) = 2 where the re-Taylorization needs it to differ from 2.
class DegenerateA : public Error {
 public:
  using Error::Error;
};

// The Taylor scheme's common eigenspace is not span{e₂}.
class NotInTilde : public Error {
 public:
  using Error::Error;
};

// A postcondition that the construction guarantees failed to hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace subsmooth
