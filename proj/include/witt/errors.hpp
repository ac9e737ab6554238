#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace witt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands (or an operand and an expected arity) disagree on the
/// number of variables.
class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t actual, const std::string& where)
      : Error(where + ": arity mismatch (expected " + std::to_string(expected) + ", got " +
              std::to_string(actual) + ")"),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t arity, const std::string& where)
      : Error(where + ": index " + std::to_string(index) + " outside 1.." + std::to_string(arity)) {}
};

class ArityTooSmall : public Error {
 public:
  ArityTooSmall(std::size_t arity, std::size_t minimum, const std::string& where)
      : Error(where + ": arity " + std::to_string(arity) + " is below the minimum " +
              std::to_string(minimum)) {}
};

/// Malformed argument that is not an arity problem (zero scale factor,
/// swap index past n-1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal invariant fails. Never an input error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace witt
