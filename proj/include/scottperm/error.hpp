#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scottperm {

enum class ErrorKind {
  ZeroConstantTerm,
  ZeroPolynomial,
  NonSquare,
  BothZero,
  DidNotConverge,
  SingularEntry,
  RepeatedXRoot,
  SharedRoot,
  ZeroLeadingCoefficient,
  BadParams,
  OutOfDomain,
  ParseError,
  DimensionMismatch,
  ZeroDegree,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::SingularEntry: return "SingularEntry";
    case ErrorKind::RepeatedXRoot: return "RepeatedXRoot";
    case ErrorKind::SharedRoot: return "SharedRoot";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scottperm
