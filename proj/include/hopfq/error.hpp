#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfq {

enum class ErrorCode {
  // scalar / matrix
  FieldMismatch,
  NotPrime,
  DivisionByZero,
  NonSquare,
  Singular,
  DimensionMismatch,
  // loop
  ParseError,
  LatinSquareViolation,
  NoIdentity,
  UnknownBuiltin,
  BadParams,
  // hopf
  NotIPLoop,
  WrongFlavor,
  // integrals / fourier
  NotAnIntegral,
  DegeneratePairing,
  // modules
  ModuleAxiomsFail,
  // frobenius / separability / semisimplicity
  NotAnIntegralIn,
  NotNormalizable,
  NotAssociative,
  ZeroIntegral,
  NotASubmodule,
  NotAProjection,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Carries a machine-readable code and, where the
/// failure is witnessed by concrete indices (a table cell, a basis tuple),
/// the lexicographically first such witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

}  // namespace hopfq
