#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace grestrict {

/// Base class of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's contract.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured enumeration or size cap would be exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// A named structural check failed.
class ValidationError : public Error {
 public:
  ValidationError(std::string check, const std::string& detail)
      : Error("validation failed [" + check + "]: " + detail),
        check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// An internal invariant that the mathematics guarantees did not hold. Always
/// a bug, never an input condition.
class TheoryViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace grestrict
