#include "simnorm/error.hpp"

namespace simnorm {

std::string_view error_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kInvalidTolerance: return "InvalidTolerance";
    case ErrorCode::kInvalidTransform: return "InvalidTransform";
    case ErrorCode::kInvalidTriangle: return "InvalidTriangle";
    case ErrorCode::kInvalidSides: return "InvalidSides";
    case ErrorCode::kInvalidAngles: return "InvalidAngles";
    case ErrorCode::kUnsupportedKind: return "UnsupportedKind";
    case ErrorCode::kDegenerateSegment: return "DegenerateSegment";
    case ErrorCode::kUnboundedType: return "UnboundedType";
    case ErrorCode::kDegenerateAngles: return "DegenerateAngles";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kDegenerateQuad: return "DegenerateQuad";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace simnorm
