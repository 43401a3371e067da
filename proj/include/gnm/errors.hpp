#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gnm {

enum class ErrorCode {
  ImproperFunction,
  NonzeroConstantTerm,
  ZeroDenominator,
  LengthMismatch,
  NotNormalizable,
  NoNormalIndex,
  IndexOutOfRange,
  NotParametrized,
  DegenerateTransform,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures of the library surface as MathError; the code
// lets callers branch without parsing messages.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gnm
