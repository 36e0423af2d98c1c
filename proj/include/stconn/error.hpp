#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stconn {

enum class ErrorCode {
  DuplicateLabel,
  BadEndpoint,
  NonpositiveWeight,
  SelfLoop,
  LengthMismatch,
  BadInput,
  Disconnected,
  Connected,
  SameVertex,
  TargetUnreachable,
  TooLarge,
  EmptyClass,
  BadRegisterSize,
  BadParameters,
  BadThresholds,
  BadPromise,
  NotCompleteParent,
  NonTermination,
  AsymmetricGeneratingSet,
  MissingParameter,
  IdentityViolation,
};

std::string_view error_name(ErrorCode code);

// Every library failure carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stconn
