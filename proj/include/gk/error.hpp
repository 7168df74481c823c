#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the 0-based character offset where
/// parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

class ConeViolation : public Error {
 public:
  using Error::Error;
};

class CapMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gk
