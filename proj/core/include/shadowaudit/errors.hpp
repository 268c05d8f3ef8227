#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shadowaudit {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed decimal numeral.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Inputs that parse but violate a documented constraint (range, digits, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operands that do not belong together (length or parameter mismatch).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Write failures, unwritable directories.
class IoError : public Error {
 public:
  using Error::Error;
};

// A fixed-precision orbit produced a non-finite or out-of-range iterate.
class OrbitEscapeError : public Error {
 public:
  OrbitEscapeError(std::size_t iterate, double value, const std::string& what)
      : Error(what), iterate_(iterate), value_(value) {}

  std::size_t iterate() const noexcept { return iterate_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t iterate_;
  double value_;
};

}  // namespace shadowaudit
