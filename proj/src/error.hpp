#pragma once

#include <stdexcept>
#include <string>

namespace lc {

enum class ErrorKind {
  Syntax,
  Width,
  Bound,
  UnknownVariable,
  Unsupported,
  NoModel,
  StackUnderflow,
  DomainTooLarge,
  MissingExpectation,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a source position, rendered as file:line:col: message.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string file, int line, int col, const std::string& msg)
      : Error(ErrorKind::Syntax, file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                     ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

}  // namespace lc
