#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acm {

/// Failure categories raised by the library. Each maps to one documented
/// precondition or numerical-health check.
enum class ErrorCode {
  InvalidMatrix,
  DimensionMismatch,
  NotUnitary,
  NotHermitian,
  SingularMatrix,
  InvariantUndefined,
  NumericalInconsistency,
  MeshTooCoarse,
  NoObstruction,
  ThresholdExceeded,
  GapClosed,
  OddDimension,
  NotSkewSymmetric,
  NotAntiSelfDual,
  NotSelfDual,
  SelfDualityLost,
  LogMethodUncertified,
  InvalidPolynomial,
  TableDrift,
  NoGuarantee,
  MeshViolation,
  CertificationFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace acm
