#pragma once

#include <stdexcept>
#include <string>

namespace tracediv {

enum class ErrorCode {
  NonPrime,
  ReduciblePoly,
  NonPrimitiveRoot,
  TableLimitExceeded,
  DivisionByZero,
  PrecisionMismatch,
  InsufficientPrecision,
  NonConvergence,
  NonUnitDivisor,
  DimensionMismatch,
  EnumerationLimitExceeded,
  NonCoprimeGroupOrder,
  Infeasible,
  DegreeZero,
  ParseError,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Errors a user can cause from the command line (exit status 2).
  bool input_error() const noexcept {
    switch (code_) {
      case ErrorCode::NonConvergence:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tracediv
