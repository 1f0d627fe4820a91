#include "error.hpp"

namespace tropitev {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IncidenceViolation: return "IncidenceViolation";
    case ErrorCode::HarmonicityViolation: return "HarmonicityViolation";
    case ErrorCode::RHViolation: return "RHViolation";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::StarViolation: return "StarViolation";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::StabilizationMismatch: return "StabilizationMismatch";
    case ErrorCode::InfeasibleLengths: return "InfeasibleLengths";
    case ErrorCode::UnrecognizedVertex: return "UnrecognizedVertex";
    case ErrorCode::NonUnitMultiplicity: return "NonUnitMultiplicity";
    case ErrorCode::MismatchAt: return "MismatchAt";
    case ErrorCode::DisconnectedCover: return "DisconnectedCover";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace tropitev
