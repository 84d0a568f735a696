#pragma once

#include <stdexcept>
#include <string>

namespace comprestree {

enum class ErrorCode {
  Disconnected,
  DuplicateEdge,
  NonpositiveWeight,
  InvalidNode,
  InvalidArgument,
  CannotConnect,
  IndexOutOfRange,
  InvalidModel,
  DegenerateEntropy,
  InvalidScheme,
  InconsistentOrientation,
  InvalidWCDS,
  NoCandidate,
  TooLarge,
  BudgetExceeded,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::InvalidNode: return "InvalidNode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CannotConnect: return "CannotConnect";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::DegenerateEntropy: return "DegenerateEntropy";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::InvalidWCDS: return "InvalidWCDS";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace comprestree
