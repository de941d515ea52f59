#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieps {

enum class ErrorKind {
  Parse,
  DimensionMismatch,
  NoSolution,
  NotASubalgebra,
  NotAnAutomorphism,
  GeneratorMovesH,
  InvalidComplement,
  NotInH,
  NotInAnnihilator,
  NotSkew,
  NotAnRMatrix,
  JacobiFailure,
  MorphismFailure,
  ClosureFailure,
  CocycleFailure,
  RadicalMismatch,
  NotACocycle,
  NotClosed,
  NotInvariant,
  NotReductive,
  NotAnFConnection,
  UnknownBuiltin,
  InvalidParams,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NoSolution: return "NoSolution";
  case ErrorKind::NotASubalgebra: return "NotASubalgebra";
  case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
  case ErrorKind::GeneratorMovesH: return "GeneratorMovesH";
  case ErrorKind::InvalidComplement: return "InvalidComplement";
  case ErrorKind::NotInH: return "NotInH";
  case ErrorKind::NotInAnnihilator: return "NotInAnnihilator";
  case ErrorKind::NotSkew: return "NotSkew";
  case ErrorKind::NotAnRMatrix: return "NotAnRMatrix";
  case ErrorKind::JacobiFailure: return "JacobiFailure";
  case ErrorKind::MorphismFailure: return "MorphismFailure";
  case ErrorKind::ClosureFailure: return "ClosureFailure";
  case ErrorKind::CocycleFailure: return "CocycleFailure";
  case ErrorKind::RadicalMismatch: return "RadicalMismatch";
  case ErrorKind::NotACocycle: return "NotACocycle";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::NotInvariant: return "NotInvariant";
  case ErrorKind::NotReductive: return "NotReductive";
  case ErrorKind::NotAnFConnection: return "NotAnFConnection";
  case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
  case ErrorKind::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace lieps
