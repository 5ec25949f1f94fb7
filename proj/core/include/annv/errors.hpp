#pragma once

#include <stdexcept>
#include <string>

namespace annv {

enum class ErrorCode {
  IndexError,
  IndeterminateCoefficient,
  NegativeCoefficient,
  PreconditionViolated,
  OrderTooHigh,
  UnknownLabel,
  ParallelLines,
  TooCloseToReconnection,
  NoExtremumInBracket,
  BandOutsideRegion,
  UnclassifiedScenario,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace annv
