#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (zero inverse, non-unit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands do not live in the same ambient space.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// The truncation order is too small to decide the question asked.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (instance tables, curve files, JSON).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qalg
