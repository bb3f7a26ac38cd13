#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mingen {

// Base of every error raised by the library. The CLI maps each subclass to an
// exit code, so new error kinds must derive from one of the classes below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Well-formed request that fails for domain reasons (unknown element name,
// a set that does not generate where one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A computation was refused because it would exceed a configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Reaching this is a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mingen
