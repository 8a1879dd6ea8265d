#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccjac {

enum class Errc {
  DivisionNotExact,
  DomainMismatch,
  InvalidDomain,
  NotCommuting,
  InternalContradiction,
  BoundTooLargeForBudget,
  RelationViolation,
  NotInvertible,
  SyntaxError,
  VariableNotAllowed,
  ExponentNegative,
  CoefficientNotInDomain,
  InvalidInstance,
};

std::string_view errc_name(Errc code);

/// Single exception type for every recoverable failure in the library.
/// The code selects the CLI exit status; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ccjac
