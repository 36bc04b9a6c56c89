#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace onerule {

enum class ErrorCode {
  EmptyWord,
  RuleNotApplicable,
  OutOfRange,
  NotBordered,
  NotSelfOverlapFree,
  UnknownLetter,
  NoOccurrence,
  PreconditionViolated,
  VerificationFailed,
  NotUnbounded,
  InvalidSystem,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A failed step inside run_trace; step() is the 0-based index of the step.
class TraceError : public Error {
 public:
  TraceError(ErrorCode code, std::size_t step, const std::string& what)
      : Error(code, what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace onerule
