#include "annv/errors.hpp"

namespace annv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::IndeterminateCoefficient: return "IndeterminateCoefficient";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::TooCloseToReconnection: return "TooCloseToReconnection";
    case ErrorCode::NoExtremumInBracket: return "NoExtremumInBracket";
    case ErrorCode::BandOutsideRegion: return "BandOutsideRegion";
    case ErrorCode::UnclassifiedScenario: return "UnclassifiedScenario";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace annv
