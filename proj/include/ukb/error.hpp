#ifndef UKB_ERROR_HPP
#define UKB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ukb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an operation is applied to values over incompatible universes.
class UniverseMismatch : public Error {
 public:
  explicit UniverseMismatch(const std::string& msg) : Error(msg) {}
};

/// Syntax error with source position (1-based line/column).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  int line_ = 0;
  int column_ = 0;
};

/// Semantic error (undeclared name, universe clash, bad qualifier, ...)
/// detected while checking or executing a parsed document.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  explicit SemanticError(const std::string& msg) : Error(msg) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace ukb

#endif
