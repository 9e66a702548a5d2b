#pragma once

#include <stdexcept>
#include <string>

namespace npvsched {

enum class ErrorKind {
  kShape,
  kInfeasibleInput,
  kDeadlineInfeasible,
  kUnboundedShift,
  kOracleTooLarge,
  kDegenerateFactors,
  kUnknownFactor,
  kBadInstance,
  kNoConvergence,
};

const char* to_string(ErrorKind kind);

/// Single exception type for all library failures; `kind()` tells callers
/// (notably the CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace npvsched
