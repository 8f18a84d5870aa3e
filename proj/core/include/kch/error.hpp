#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kch {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that do not live in the same ring, or data violating a type invariant.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, or a substitution that sends a denominator to zero.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A coefficient has a pole where it is being specialized.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A computation stopped at a configured resource limit (S-pair budget or
/// wall-clock timeout) before producing a complete answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace kch
