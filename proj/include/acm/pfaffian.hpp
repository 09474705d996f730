#pragma once

// Pfaffians of complex skew-symmetric matrices.

#include "acm/linalg.hpp"

namespace acm {

/// Pf(A) = phase * exp(log_abs); log_abs is -inf for a zero Pfaffian.
struct PfaffianValue {
  double log_abs = 0.0;
  Complex phase{1.0, 0.0};

  Complex value() const;
};

/// ||A + A^T|| relative to max(1, ||A||).
double skew_symmetry_defect(const Matrix& A);

/// Throws InvalidMatrix, OddDimension or NotSkewSymmetric (defect > tol).
void require_skew_symmetric(const Matrix& A, double tol = 1e-10);

/// Householder tridiagonalization. Works in log-magnitude so large
/// dimensions neither overflow nor underflow.
PfaffianValue pfaffian_householder(const Matrix& A, double tol = 1e-10);

/// Parlett-Reid LTL^T elimination with partial pivoting.
Complex pfaffian_parlett_reid(const Matrix& A, double tol = 1e-10);

/// Convenience: pfaffian_householder(A).value().
Complex pfaffian(const Matrix& A, double tol = 1e-10);

}  // namespace acm
