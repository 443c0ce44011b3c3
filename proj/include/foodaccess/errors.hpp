#pragma once

#include <stdexcept>
#include <string>

namespace foodaccess {

enum class ErrorCode {
  InvalidInput,
  InvalidConfig,
  MissingDistance,
  PartialResult,
  BudgetExhausted,
  ProviderFailure,
  InsufficientValidation,
  ZeroCount,
  SingularDesign,
  DegenerateTruncation,
  DegenerateInput,
  InvalidGraph,
  UnavailableStrategy,
  ScenarioDegenerate,
  JoinMismatch,
  IoError,
};

/// Library-wide exception type. `code()` lets callers (notably the CLI)
/// map failures onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace foodaccess
