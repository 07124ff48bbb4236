#include "lamistrat/error.hpp"

namespace lamistrat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EdgeDegree: return "EdgeDegree";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfFolded: return "SelfFolded";
    case ErrorKind::OrientationMismatch: return "OrientationMismatch";
    case ErrorKind::BadEuler: return "BadEuler";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::TriangleInequalityViolation: return "TriangleInequalityViolation";
    case ErrorKind::PeripheralComponent: return "PeripheralComponent";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::EmptyLamination: return "EmptyLamination";
    case ErrorKind::NonDisjointComponents: return "NonDisjointComponents";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::WeightCapExceeded: return "WeightCapExceeded";
    case ErrorKind::NotShortenable: return "NotShortenable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace lamistrat
