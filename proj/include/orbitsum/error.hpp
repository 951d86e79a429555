#pragma once

#include <stdexcept>
#include <string>

namespace orbitsum {

enum class ErrorKind {
  dimension,
  undefined_leading_term,
  zero_divisor,
  unknown_variable,
  parse,
  order,
  budget_exceeded,
  pole,
  convergence,
  data_integrity,
  lifting,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::undefined_leading_term: return "undefined_leading_term";
    case ErrorKind::zero_divisor: return "zero_divisor";
    case ErrorKind::unknown_variable: return "unknown_variable";
    case ErrorKind::parse: return "parse";
    case ErrorKind::order: return "order";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::pole: return "pole";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::data_integrity: return "data_integrity";
    case ErrorKind::lifting: return "lifting";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbitsum
