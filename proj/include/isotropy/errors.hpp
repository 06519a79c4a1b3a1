#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isotropy {

enum class ErrorCode {
  kMalformedInput,
  kNonPositivePart,
  kNotWeaklyDecreasing,
  kBoxOutOfShape,
  kEmptyPartition,
  kSizeGuard,
  kDegreeGuard,
  kNotSymmetric,
  kNotHomogeneous,
  kInternalNonIntegral,
  kInternalMismatch,
  kZeroBundle,
  kZeroModule,
  kInvalidRange,
  kOutOfTheoremScope,
  kChainStepFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI and the Python bindings can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isotropy
