#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loclab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Request exceeds a built-in capability (e.g. enumeration order).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Iterative numeric routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace loclab
