#ifndef SIMNORM_ERROR_HPP_
#define SIMNORM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace simnorm {

enum class ErrorCode {
  kInvalidPoint,
  kInvalidTolerance,
  kInvalidTransform,
  kInvalidTriangle,
  kInvalidSides,
  kInvalidAngles,
  kUnsupportedKind,
  kDegenerateSegment,
  kUnboundedType,
  kDegenerateAngles,
  kDegenerate,
  kOutOfDomain,
  kDegenerateQuad,
  kPreconditionViolated,
  kArityMismatch,
  kParseError,
  kIoError,
};

// Stable token printed on the diagnostic stream, e.g. "UnboundedType".
std::string_view error_token(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_token(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simnorm

#endif  // SIMNORM_ERROR_HPP_
