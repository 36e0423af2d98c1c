#include "stconn/error.hpp"

namespace stconn {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::BadEndpoint: return "BadEndpoint";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Connected: return "Connected";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::BadRegisterSize: return "BadRegisterSize";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadThresholds: return "BadThresholds";
    case ErrorCode::BadPromise: return "BadPromise";
    case ErrorCode::NotCompleteParent: return "NotCompleteParent";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::AsymmetricGeneratingSet: return "AsymmetricGeneratingSet";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

}  // namespace stconn
