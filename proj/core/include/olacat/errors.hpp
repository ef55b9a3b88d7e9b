#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace olacat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Precondition violations: bad indices, mismatched block counts, ineligible weights.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured computation cap was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace olacat
