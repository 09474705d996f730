#pragma once

// Dense complex matrix kernel: norms, unitary/hermitian spectral
// decompositions and the periodic functional calculus f[V].

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "acm/error.hpp"

namespace acm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance used by every "is unitary / is hermitian" gate unless the caller
/// overrides it.
inline constexpr double kDefaultUnitaryTol = 1e-8;

/// Above this dimension the operator norm switches from a full SVD to power
/// iteration on X*X.
inline constexpr Eigen::Index kSvdNormMaxDim = 512;

/// Throws InvalidMatrix unless X is square with finite entries.
void require_square_finite(const Matrix& X);

/// Largest singular value.
double operator_norm(const Matrix& X);

/// ||UV - VU||.
double commutator_norm(const Matrix& U, const Matrix& V);

/// ||VUV*U* - I||; equals commutator_norm for unitary U, V.
double multiplicative_commutator_defect(const Matrix& U, const Matrix& V);

/// ||X*X - I||.
double unitarity_defect(const Matrix& X);

/// ||X - X*||.
double hermiticity_defect(const Matrix& X);

bool is_unitary(const Matrix& X, double tol = kDefaultUnitaryTol);
bool is_hermitian(const Matrix& X, double tol = kDefaultUnitaryTol);

Matrix commutator(const Matrix& A, const Matrix& B);
Matrix anticommutator(const Matrix& A, const Matrix& B);

/// Maps an angle into (-pi, pi]. Angles within `snap` of -pi land on +pi.
double wrap_angle(double theta, double snap = 0.0);

/// Spectral data of a unitary matrix: V = Q diag(e^{i angles}) Q*.
struct UnitaryEigen {
  RealVector angles;  // in (-pi, pi]; an eigenvalue at -1 is reported as +pi
  Matrix Q;           // unitary eigenvector matrix

  Eigen::Index dim() const { return angles.size(); }
};

/// Diagonalizes a unitary matrix through its complex Schur form.
/// Throws NotUnitary when ||V*V - I|| > tol.
UnitaryEigen unitary_eig(const Matrix& V, double tol = kDefaultUnitaryTol);

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<Complex(double)>;

/// f[V] = Q diag(f(theta_j)) Q*, symmetrized to exact hermiticity.
Matrix apply_periodic(const UnitaryEigen& eig, const RealFunction& f);
Matrix apply_periodic(const RealFunction& f, const Matrix& V,
                      double tol = kDefaultUnitaryTol);

/// Complex-valued variant, no symmetrization.
Matrix apply_periodic_complex(const UnitaryEigen& eig, const ComplexFunction& f);

/// Finite Fourier series sum_{k=-n}^{n} a_k e^{ikx}.
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, Complex(0.0)) {}

  /// `coeffs` holds a_{-n}, ..., a_0, ..., a_n (odd length).
  explicit TrigPoly(std::vector<Complex> coeffs);

  /// sum_k c_k e^{ikx} with c_{-k} = c_k: c_0 + 2 sum c_k cos(kx).
  static TrigPoly from_cosine(const std::vector<double>& c);
  /// sum_{k>=1} s_k sin(kx); s[0] is ignored.
  static TrigPoly from_sine(const std::vector<double>& s);

  int degree() const { return static_cast<int>(coeffs_.size() / 2); }
  Complex coeff(int k) const;
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// a_{-k} == conj(a_k) for every k, within tol.
  bool is_real_valued(double tol = 1e-14) const;

  Complex operator()(double x) const;
  double real_value(double x) const { return (*this)(x).real(); }

  /// Truncation to degree n (n <= degree()).
  TrigPoly truncated(int n) const;

  /// sum_k |k a_k|, the l1 norm of the derivative's Fourier coefficients.
  double derivative_l1() const;

 private:
  std::vector<Complex> coeffs_;
};

/// sum a_k V^k accumulated Horner-style in V and V*.
Matrix apply_trigpoly(const TrigPoly& p, const Matrix& V,
                      double tol = kDefaultUnitaryTol);

/// Polar unitary factor A (A*A)^{-1/2}. Throws SingularMatrix when the
/// smallest singular value is at or below tol times the largest.
Matrix unitary_part(const Matrix& A, double tol = 1e-12);

/// Ascending eigenvalues of a hermitian matrix. Throws NotHermitian.
RealVector hermitian_eig(const Matrix& H, double tol = kDefaultUnitaryTol);

/// Validated pair of same-size unitaries with cached ||[U,V]||.
class UnitaryPair {
 public:
  /// Throws DimensionMismatch / NotUnitary.
  UnitaryPair(Matrix U, Matrix V, double unitary_tol = kDefaultUnitaryTol);

  const Matrix& U() const { return U_; }
  const Matrix& V() const { return V_; }
  double delta() const { return delta_; }
  double unitary_tol() const { return unitary_tol_; }
  Eigen::Index dim() const { return U_.rows(); }

  /// (V, U).
  UnitaryPair swapped() const;

 private:
  Matrix U_;
  Matrix V_;
  double delta_;
  double unitary_tol_;
};

/// Block-diagonal direct sum of two pairs.
UnitaryPair direct_sum(const UnitaryPair& a, const UnitaryPair& b);

Matrix block_diag(const Matrix& A, const Matrix& B);

}  // namespace acm
