#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamina {

enum class ErrorKind {
  InvalidDegree,
  DegenerateClass,
  NotGeneratingFamily,
  PrecriticalGenerator,
  InvalidLamination,
  Unresolvable,
  NotPeriodic,
  NotARotation,
  InternalInconsistency,
  InvalidFamily,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lamina
