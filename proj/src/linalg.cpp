#include "acm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace acm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvariantUndefined: return "InvariantUndefined";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::MeshTooCoarse: return "MeshTooCoarse";
    case ErrorCode::NoObstruction: return "NoObstruction";
    case ErrorCode::ThresholdExceeded: return "ThresholdExceeded";
    case ErrorCode::GapClosed: return "GapClosed";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotAntiSelfDual: return "NotAntiSelfDual";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::SelfDualityLost: return "SelfDualityLost";
    case ErrorCode::LogMethodUncertified: return "LogMethodUncertified";
    case ErrorCode::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::TableDrift: return "TableDrift";
    case ErrorCode::NoGuarantee: return "NoGuarantee";
    case ErrorCode::MeshViolation: return "MeshViolation";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void require_square_finite(const Matrix& X) {
  if (X.rows() != X.cols() || X.rows() == 0) {
    throw Error(ErrorCode::InvalidMatrix, "matrix must be square and non-empty");
  }
  if (!X.allFinite()) {
    throw Error(ErrorCode::InvalidMatrix, "matrix has non-finite entries");
  }
}

namespace {

double power_iteration_norm(const Matrix& X) {
  // Power iteration on X*X; the start vector is deterministic.
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(X.cols());
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXcd w = X.adjoint() * (X * v);
    double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (std::abs(next - lambda) <= 1e-12 * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

}  // namespace

double operator_norm(const Matrix& X) {
  require_square_finite(X);
  if (X.rows() > kSvdNormMaxDim) return power_iteration_norm(X);
  Eigen::BDCSVD<Matrix> svd(X);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double commutator_norm(const Matrix& U, const Matrix& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator of differently sized matrices");
  }
  return operator_norm(U * V - V * U);
}

double multiplicative_commutator_defect(const Matrix& U, const Matrix& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator of differently sized matrices");
  }
  Matrix W = V * U * V.adjoint() * U.adjoint();
  W.diagonal().array() -= 1.0;
  return operator_norm(W);
}

namespace {

// Frobenius norm bounds the operator norm from above, so a small Frobenius
// norm settles the gate without an SVD.
bool norm_within(const Matrix& X, double tol) {
  if (X.norm() <= tol) return true;
  return operator_norm(X) <= tol;
}

}  // namespace

double unitarity_defect(const Matrix& X) {
  require_square_finite(X);
  Matrix D = X.adjoint() * X;
  D.diagonal().array() -= 1.0;
  return operator_norm(D);
}

double hermiticity_defect(const Matrix& X) {
  require_square_finite(X);
  return operator_norm(X - X.adjoint());
}

bool is_unitary(const Matrix& X, double tol) {
  require_square_finite(X);
  Matrix D = X.adjoint() * X;
  D.diagonal().array() -= 1.0;
  return norm_within(D, tol);
}

bool is_hermitian(const Matrix& X, double tol) {
  require_square_finite(X);
  return norm_within(X - X.adjoint(), tol);
}

Matrix commutator(const Matrix& A, const Matrix& B) { return A * B - B * A; }

Matrix anticommutator(const Matrix& A, const Matrix& B) { return A * B + B * A; }

double wrap_angle(double theta, double snap) {
  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta, 2.0 * pi);  // in [-pi, pi]
  if (t <= -pi + snap) t = pi;
  return t;
}

UnitaryEigen unitary_eig(const Matrix& V, double tol) {
  require_square_finite(V);
  if (!is_unitary(V, tol)) {
    throw Error(ErrorCode::NotUnitary, "matrix is not unitary within tolerance");
  }
  Eigen::ComplexSchur<Matrix> schur(V, true);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalInconsistency, "Schur decomposition did not converge");
  }
  UnitaryEigen out;
  const Matrix& T = schur.matrixT();
  out.angles.resize(T.rows());
  for (Eigen::Index j = 0; j < T.rows(); ++j) {
    // Snap only roundoff-level cases onto the +pi side of the cut.
    out.angles(j) = wrap_angle(std::arg(T(j, j)), 1e-14);
  }
  out.Q = schur.matrixU();
  return out;
}

Matrix apply_periodic(const UnitaryEigen& eig, const RealFunction& f) {
  const Eigen::Index d = eig.dim();
  Eigen::VectorXd vals(d);
  for (Eigen::Index j = 0; j < d; ++j) vals(j) = f(eig.angles(j));
  Matrix out = eig.Q * vals.asDiagonal() * eig.Q.adjoint();
  return 0.5 * (out + out.adjoint());
}

Matrix apply_periodic(const RealFunction& f, const Matrix& V, double tol) {
  return apply_periodic(unitary_eig(V, tol), f);
}

Matrix apply_periodic_complex(const UnitaryEigen& eig, const ComplexFunction& f) {
  const Eigen::Index d = eig.dim();
  Eigen::VectorXcd vals(d);
  for (Eigen::Index j = 0; j < d; ++j) vals(j) = f(eig.angles(j));
  return eig.Q * vals.asDiagonal() * eig.Q.adjoint();
}

TrigPoly::TrigPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidPolynomial, "coefficient list must have odd length");
  }
}

TrigPoly TrigPoly::from_cosine(const std::vector<double>& c) {
  const int n = c.empty() ? 0 : static_cast<int>(c.size()) - 1;
  std::vector<Complex> coeffs(2 * n + 1, Complex(0.0));
  for (int k = 0; k <= n; ++k) {
    coeffs[n + k] = c[k];
    coeffs[n - k] = c[k];
  }
  return TrigPoly(std::move(coeffs));
}

TrigPoly TrigPoly::from_sine(const std::vector<double>& s) {
  const int n = s.empty() ? 0 : static_cast<int>(s.size()) - 1;
  std::vector<Complex> coeffs(2 * n + 1, Complex(0.0));
  for (int k = 1; k <= n; ++k) {
    coeffs[n + k] = Complex(0.0, -0.5 * s[k]);
    coeffs[n - k] = Complex(0.0, 0.5 * s[k]);
  }
  return TrigPoly(std::move(coeffs));
}

Complex TrigPoly::coeff(int k) const {
  const int n = degree();
  if (k < -n || k > n) return Complex(0.0);
  return coeffs_[n + k];
}

bool TrigPoly::is_real_valued(double tol) const {
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  }
  return true;
}

Complex TrigPoly::operator()(double x) const {
  const int n = degree();
  Complex sum = coeff(0);
  const Complex z = std::polar(1.0, x);
  Complex zk = 1.0;
  for (int k = 1; k <= n; ++k) {
    zk *= z;
    sum += coeff(k) * zk + coeff(-k) * std::conj(zk);
  }
  return sum;
}

TrigPoly TrigPoly::truncated(int n) const {
  n = std::clamp(n, 0, degree());
  std::vector<Complex> c(2 * n + 1);
  for (int k = -n; k <= n; ++k) c[n + k] = coeff(k);
  return TrigPoly(std::move(c));
}

double TrigPoly::derivative_l1() const {
  double m = 0.0;
  for (int k = -degree(); k <= degree(); ++k) m += std::abs(k) * std::abs(coeff(k));
  return m;
}

Matrix apply_trigpoly(const TrigPoly& p, const Matrix& V, double tol) {
  require_square_finite(V);
  if (!is_unitary(V, tol)) {
    throw Error(ErrorCode::NotUnitary, "matrix is not unitary within tolerance");
  }
  const Eigen::Index d = V.rows();
  const int n = p.degree();
  Matrix result = p.coeff(0) * Matrix::Identity(d, d);
  if (n == 0) return result;
  const Matrix Vs = V.adjoint();
  // a_1 V + a_2 V^2 + ... = V (a_1 + V (a_2 + ... V a_n))
  Matrix pos = p.coeff(n) * Matrix::Identity(d, d);
  Matrix neg = p.coeff(-n) * Matrix::Identity(d, d);
  for (int k = n - 1; k >= 1; --k) {
    pos = V * pos;
    pos.diagonal().array() += p.coeff(k);
    neg = Vs * neg;
    neg.diagonal().array() += p.coeff(-k);
  }
  result += V * pos + Vs * neg;
  return result;
}

Matrix unitary_part(const Matrix& A, double tol) {
  require_square_finite(A);
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= tol * s(0)) {
    throw Error(ErrorCode::SingularMatrix, "matrix is singular; unitary part undefined");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

RealVector hermitian_eig(const Matrix& H, double tol) {
  require_square_finite(H);
  if (!is_hermitian(H, tol * std::max(1.0, H.cwiseAbs().maxCoeff()))) {
    throw Error(ErrorCode::NotHermitian, "matrix is not hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalInconsistency, "hermitian eigensolver did not converge");
  }
  return es.eigenvalues();
}

UnitaryPair::UnitaryPair(Matrix U, Matrix V, double unitary_tol)
    : U_(std::move(U)), V_(std::move(V)), unitary_tol_(unitary_tol) {
  require_square_finite(U_);
  require_square_finite(V_);
  if (U_.rows() != V_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "U and V have different sizes");
  }
  if (!is_unitary(U_, unitary_tol_)) {
    throw Error(ErrorCode::NotUnitary, "U is not unitary within tolerance");
  }
  if (!is_unitary(V_, unitary_tol_)) {
    throw Error(ErrorCode::NotUnitary, "V is not unitary within tolerance");
  }
  delta_ = commutator_norm(U_, V_);
}

UnitaryPair UnitaryPair::swapped() const { return UnitaryPair(V_, U_, unitary_tol_); }

Matrix block_diag(const Matrix& A, const Matrix& B) {
  Matrix out = Matrix::Zero(A.rows() + B.rows(), A.cols() + B.cols());
  out.topLeftCorner(A.rows(), A.cols()) = A;
  out.bottomRightCorner(B.rows(), B.cols()) = B;
  return out;
}

UnitaryPair direct_sum(const UnitaryPair& a, const UnitaryPair& b) {
  return UnitaryPair(block_diag(a.U(), b.U()), block_diag(a.V(), b.V()),
                     std::max(a.unitary_tol(), b.unitary_tol()));
}

}  // namespace acm
