#pragma once

#include <stdexcept>
#include <string>

namespace finq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (cycle text, state vectors, files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A group closure grew beyond the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request, e.g. a Born ratio with a zero projection.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug or an
/// implementation bound (e.g. no usable prime for modular lifting).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace finq
