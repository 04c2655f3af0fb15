#pragma once

#include <stdexcept>
#include <string>

namespace cucalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element outside the carrier it was handed to, or arithmetic out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Carrier pair or instance without a closed form in this library.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace cucalc
