#pragma once

#include <stdexcept>
#include <string>

namespace ncox {

enum class ErrorCode {
  AsymmetricMatrix,
  DiagonalOutOfRange,
  OffDiagonalOutOfRange,
  DisconnectedDiagram,
  NotFinite,
  InvalidPermutation,
  InvalidParams,
  IndexOutOfRange,
  ParamsMismatch,
  BoundTooSmall,
  DegreeExceedsComputation,
  CaseInapplicable,
  RelationViolation,
  ParseError,
  IoError,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

// Errors caused by bad input, as opposed to a broken internal invariant.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncox
