#pragma once

#include <stdexcept>
#include <string>

namespace uec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad spectrum, letter out of range, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size or complexity guard refused the request.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// The bialternant route cannot divide by a vanishing Vandermonde product.
class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

/// Operation only implemented for a specific local dimension.
class UnsupportedDimensionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace uec
