#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratdyn {

enum class ErrorCode {
  structural,
  division_by_zero,
  indeterminacy,
  precondition,
  parse,
  undeclared_identifier,
  usage,
  io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Lexical and syntax errors carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, message), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ratdyn
