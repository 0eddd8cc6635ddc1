#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pervarr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (zero monodromy, n = 1 minor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)),
        detail_(what),
        position_(position) {}

  // Message without the column suffix.
  const std::string& detail() const noexcept { return detail_; }

  // 0-based offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

}  // namespace pervarr
