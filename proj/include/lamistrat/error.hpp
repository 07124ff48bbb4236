#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamistrat {

enum class ErrorKind {
  InvalidInput,
  EdgeDegree,
  Disconnected,
  SelfFolded,
  OrientationMismatch,
  BadEuler,
  NotFlippable,
  ParityViolation,
  TriangleInequalityViolation,
  PeripheralComponent,
  FrameMismatch,
  NotConnected,
  EmptyLamination,
  NonDisjointComponents,
  BudgetExceeded,
  CycleDetected,
  NotBijective,
  WeightCapExceeded,
  NotShortenable,
  NotClosed,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is the
// machine-readable tag surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lamistrat
