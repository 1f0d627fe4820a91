#pragma once

#include <stdexcept>
#include <string>

namespace tropitev {

enum class ErrorCode {
  InvalidArgument = 1,
  NonSquare,
  Disconnected,
  Unstable,
  TooLarge,
  IncidenceViolation,
  HarmonicityViolation,
  RHViolation,
  LengthMismatch,
  ProfileMismatch,
  StarViolation,
  DegreeTooLarge,
  SizeMismatch,
  GenusMismatch,
  InvalidWord,
  IndexOutOfRange,
  StabilizationMismatch,
  InfeasibleLengths,
  UnrecognizedVertex,
  NonUnitMultiplicity,
  MismatchAt,
  DisconnectedCover,
  Parse,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace tropitev
