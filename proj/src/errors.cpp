#include "isotropy/errors.hpp"

namespace isotropy {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNonPositivePart: return "NonPositivePart";
    case ErrorCode::kNotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::kBoxOutOfShape: return "BoxOutOfShape";
    case ErrorCode::kEmptyPartition: return "EmptyPartition";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kDegreeGuard: return "DegreeGuard";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kInternalNonIntegral: return "InternalNonIntegral";
    case ErrorCode::kInternalMismatch: return "InternalMismatch";
    case ErrorCode::kZeroBundle: return "ZeroBundle";
    case ErrorCode::kZeroModule: return "ZeroModule";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kOutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::kChainStepFailed: return "ChainStepFailed";
  }
  return "Unknown";
}

}  // namespace isotropy
