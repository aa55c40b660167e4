#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcrucial {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for caller mistakes: bad arguments, unmet preconditions, bad input text.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotPrime : public InputError {
 public:
  using InputError::InputError;
};

class NegativeValuation : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZero : public InputError {
 public:
  using InputError::InputError;
};

class ZeroLeading : public InputError {
 public:
  using InputError::InputError;
};

class ZeroConstant : public InputError {
 public:
  using InputError::InputError;
};

/// The lift has vanishing resultant, so it does not define a degree-2 map.
class DegenerateMap : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrix : public InputError {
 public:
  using InputError::InputError;
};

class NonIntegralRadius : public InputError {
 public:
  using InputError::InputError;
};

/// A piecewise-affine function has no bounded minimizing set.
class Unbounded : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateMultipliers : public InputError {
 public:
  using InputError::InputError;
};

class UnhandledResidueCase : public InputError {
 public:
  using InputError::InputError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeError : public InputError {
 public:
  using InputError::InputError;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// The end-to-end verifier found a mismatch between independent paths.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace quadcrucial
