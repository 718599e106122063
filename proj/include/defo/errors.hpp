#pragma once

#include <stdexcept>
#include <string>

namespace defo {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values from incompatible variable environments were mixed.
class EnvMismatch : public Error {
 public:
  explicit EnvMismatch(const std::string& msg) : Error(msg) {}
};

// A precondition on indices, arities or variable sorts was violated.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Textual input could not be parsed; carries a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace defo
