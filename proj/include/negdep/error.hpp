#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negdep {

enum class ErrorCode {
  kParse,
  kMassNotOne,
  kDimMismatch,
  kNonpositiveProbability,
  kEmptyIndexSet,
  kIndexOutOfRange,
  kZeroProbabilityEvent,
  kUndefinedAtAtom,
  kSupportOutOfRange,
  kInvalidModel,
  kEnumerationCapExceeded,
  kGridTooLarge,
  kImplicationViolation,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI exit-code mapping) can branch without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace negdep
