#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octo2 {

enum class ErrorCode {
  ZeroInverse,
  DescriptorMismatch,
  NotASquare,
  UnsupportedField,
  ZeroArgument,
  ParseError,
  DimensionMismatch,
  Singular,
  InvalidPosition,
  ZeroScalar,
  ZeroParameter,
  ExcludedSmallCase,
  AlgebraMismatch,
  NotInvertible,
  NotClosed,
  MissingIdentity,
  NotQuaternion,
  BadR,
  NotTotallySingular,
  NotInBhat,
  ZeroB,
  NotInvolution,
  NotOrder2,
  BadNorms,
  ExtensionFails,
  DomainTooLarge,
  TooLarge,
  CapExceeded,
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::ExcludedSmallCase: return "ExcludedSmallCase";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::NotQuaternion: return "NotQuaternion";
    case ErrorCode::BadR: return "BadR";
    case ErrorCode::NotTotallySingular: return "NotTotallySingular";
    case ErrorCode::NotInBhat: return "NotInBhat";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotOrder2: return "NotOrder2";
    case ErrorCode::BadNorms: return "BadNorms";
    case ErrorCode::ExtensionFails: return "ExtensionFails";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace octo2
