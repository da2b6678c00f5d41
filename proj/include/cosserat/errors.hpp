#pragma once

#include <stdexcept>
#include <string>

namespace cosserat {

enum class ErrorKind {
  InvalidInput,
  InvalidMass,
  InvalidDirection,
  MissingLengthScale,
  OutOfRange,
  UnsupportedNotation,
  Unavailable,
  EvanescentBranch,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidMass: return "InvalidMass";
    case ErrorKind::InvalidDirection: return "InvalidDirection";
    case ErrorKind::MissingLengthScale: return "MissingLengthScale";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnsupportedNotation: return "UnsupportedNotation";
    case ErrorKind::Unavailable: return "Unavailable";
    case ErrorKind::EvanescentBranch: return "EvanescentBranch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cosserat
