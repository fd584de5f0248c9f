#pragma once

#include <stdexcept>
#include <string>

namespace periods {

enum class ErrorCode {
  InvalidInput,
  NonConvergent,
  PoleRequired,
  LogDivergence,
  DivergentRestriction,
  InternalDivergence,
  BudgetExceeded,
  PrecisionUnattainable,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace periods
