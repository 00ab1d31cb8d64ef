#include "lamina/error.hpp"

namespace lamina {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDegree: return "invalid-degree";
    case ErrorKind::DegenerateClass: return "degenerate-class";
    case ErrorKind::NotGeneratingFamily: return "not-a-generating-family";
    case ErrorKind::PrecriticalGenerator: return "precritical-generator";
    case ErrorKind::InvalidLamination: return "invalid-lamination";
    case ErrorKind::Unresolvable: return "unresolvable-at-depth";
    case ErrorKind::NotPeriodic: return "not-periodic";
    case ErrorKind::NotARotation: return "not-a-rotation";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::InvalidFamily: return "invalid-family";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace lamina
