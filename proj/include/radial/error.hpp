#pragma once

#include <stdexcept>
#include <string>

namespace radial {

enum class ErrorCode {
  IdenticalPoints,
  NotObservationPoint,
  NotInteriorPoint,
  UncoloredSet,
  EmptySequence,
  MismatchedIndexSets,
  TooFewPoints,
  NotValidated,
  DegenerateInput,
  RetryExhausted,
  ParameterDegenerate,
  BudgetExceeded,
  ValidationRequired,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radial
