#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permdiag {

enum class ErrorCode {
  Empty,
  DuplicateValue,
  OutOfRange,
  Parse,
  Not321Avoiding,
  Not132Avoiding,
  Unbalanced,
  BelowAxis,
  DoesNotFitStaircase,
  MalformedMinima,
  Unfillable,
  BadK,
  BadS,
  PreconditionViolated,
  SizeTooLarge,
  BadArgs,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code lets callers branch without
/// string matching; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permdiag
