#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace clasplab {

enum class ErrorCode {
  kInvalidDiagram,
  kParseError,
  kInvalidBraidLetter,
  kSameEye,
  kInvalidRuling,
  kUnknownEye,
  kNotApplicable,
  kTransportFailure,
  kOutOfDomain,
  kScriptError,
  kEvennessViolation,
  kBudgetExceeded,
  kUnclassifiedInterval,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDiagram: return "InvalidDiagram";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidBraidLetter: return "InvalidBraidLetter";
    case ErrorCode::kSameEye: return "SameEye";
    case ErrorCode::kInvalidRuling: return "InvalidRuling";
    case ErrorCode::kUnknownEye: return "UnknownEye";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kTransportFailure: return "TransportFailure";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kScriptError: return "ScriptError";
    case ErrorCode::kEvennessViolation: return "EvennessViolation";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnclassifiedInterval: return "UnclassifiedInterval";
  }
  return "Unknown";
}

// location is 1-based: a line number for parse errors, an event index for
// diagram errors, a move index for script errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> location = std::nullopt)
      : std::runtime_error(message), code_(code), location_(location) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> location_;
};

}  // namespace clasplab
