#include "permdiag/error.hpp"

namespace permdiag {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Not321Avoiding: return "Not321Avoiding";
    case ErrorCode::Not132Avoiding: return "Not132Avoiding";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::BelowAxis: return "BelowAxis";
    case ErrorCode::DoesNotFitStaircase: return "DoesNotFitStaircase";
    case ErrorCode::MalformedMinima: return "MalformedMinima";
    case ErrorCode::Unfillable: return "Unfillable";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadS: return "BadS";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::BadArgs: return "BadArgs";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace permdiag
