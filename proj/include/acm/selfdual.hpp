#pragma once

// Self-dual structure X -> X^# = -Z X^T Z, the modified Pfaffian and the
// Pfaffian-Bott index kappa_2 of self-dual almost commuting pairs.

#include <optional>

#include "acm/bott.hpp"
#include "acm/pfaffian.hpp"

namespace acm {

/// Z = ((0, I), (-I, 0)) of size 2N and Q = (1/sqrt 2)((I, -iZ), (iZ, I)) of
/// size 4N.
class DualStructure {
 public:
  explicit DualStructure(Eigen::Index N);

  Eigen::Index N() const { return N_; }
  const Matrix& Z() const { return Z_; }
  const Matrix& Q() const { return Q_; }

  /// -Z X^T Z; blockwise (A, B; C, D) -> (D^T, -B^T; -C^T, A^T).
  Matrix dual(const Matrix& X) const;

  /// ((A, B), (C, D)) -> ((D^#, -B^#), (-C^#, A^#)) on 4N x 4N matrices.
  Matrix dual_tensor(const Matrix& X) const;

  /// ||X - X^#||.
  double self_duality_defect(const Matrix& X) const;

  /// (X + X^#) / 2.
  Matrix symmetrize(const Matrix& X) const;

 private:
  Eigen::Index N_;
  Matrix Z_;
  Matrix Q_;
};

/// Convenience wrappers that build the structure from the dimension.
/// Throw DimensionMismatch on odd (resp. non multiple of 4) sizes.
Matrix dual(const Matrix& X);
Matrix dual_tensor(const Matrix& X);

/// Unitary pair with U^# = U and V^# = V.
class SelfDualPair {
 public:
  /// Throws NotSelfDual when either defect exceeds tol * max(1, ||X||).
  SelfDualPair(UnitaryPair pair, double tol = 1e-9);

  const UnitaryPair& pair() const { return pair_; }
  const DualStructure& structure() const { return structure_; }
  double delta() const { return pair_.delta(); }
  /// max(||U - U^#||, ||V - V^#||) at construction.
  double symmetry_violation() const { return violation_; }

 private:
  UnitaryPair pair_;
  DualStructure structure_;
  double violation_;
};

/// Self-duality defect of a pair without constructing it.
double pair_self_duality_defect(const Matrix& U, const Matrix& V);

/// Pf(Q* X Q) for X with X^{#(x)#} = -X; Q* X Q is skew-symmetrized before
/// the Pfaffian. Throws NotAntiSelfDual when ||X + X^{#(x)#}|| exceeds
/// tol * max(1, ||X||).
PfaffianValue modified_pfaffian(const Matrix& X, const DualStructure& structure,
                                double tol = 1e-9);
PfaffianValue modified_pfaffian(const Matrix& X, double tol = 1e-9);

/// B(U,V) for a self-dual pair with f[V], g[V], h[V] and B itself pushed back
/// onto the symmetric subspace. `drift` is the largest correction applied.
struct SelfDualBott {
  BottMatrix bott;
  double drift = 0.0;
};

SelfDualBott build_selfdual_B(const SelfDualPair& sd, bool use_trigpoly = false);

struct Kappa2Options {
  bool allow_uncertified = false;
  bool use_trigpoly = false;
};

struct Kappa2Result {
  int kappa2 = 1;
  bool certified = false;        // delta <= kCertifiedDelta
  bool ill_conditioned = false;  // |Pf| below the floor implied by the gap
  double gap = 0.0;
  double delta = 0.0;
  double log_abs_pfaffian = 0.0;
  double imag_ratio = 0.0;       // |Im Pf| / |Pf|
  double drift = 0.0;
};

/// Sign of the real modified Pfaffian of an anti-self-dual hermitian matrix.
/// Throws NumericalInconsistency when the value is not real or its magnitude
/// disagrees with sqrt|det|.
Kappa2Result pfaffian_sign(const Matrix& B, const RealVector& eigenvalues,
                           const DualStructure& structure);

/// kappa_2 = Sign Pf~(B(U,V)). ThresholdExceeded above kCertifiedDelta unless
/// allow_uncertified.
Kappa2Result pfaffian_bott_index(const SelfDualPair& sd, const Kappa2Options& options = {});

/// (1/5) sqrt(1 - 5 dA^2) + (1/5) sqrt(1 - 5 dB^2).
double selfdual_distance_bound(double delta_a, double delta_b);
/// 1/5 + (1/5) sqrt(1 - 5 delta^2), distance to commuting self-dual pairs
/// from a pair with kappa_2 = -1.
double selfdual_commuting_distance_bound(double delta);

/// Lower bound on ||U - U1|| + ||V - V1|| between two self-dual pairs.
/// Throws NoObstruction when kappa_2 agrees.
double selfdual_distance_bounds(const SelfDualPair& a, const SelfDualPair& b);

/// True iff the sorted spectrum of the self-dual hermitian H pairs up to
/// tol * max(1, ||H||). Throws NotHermitian / NotSelfDual.
bool check_kramers(const Matrix& H, double tol = 1e-7);

}  // namespace acm
