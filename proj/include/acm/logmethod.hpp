#pragma once

// Log-method Bott matrix B_L(U,V) built from a principal logarithm iK of V,
// with f1(x) = x/pi, g1 = 0 and h1(x) = sqrt(1 - x^2/pi^2).

#include <optional>

#include "acm/selfdual.hpp"

namespace acm {

/// Commutator norm up to which the log method is certified to agree with the
/// trig method.
inline constexpr double kLogCertifiedDelta = 0.125;

/// Eigenangles within this distance of -pi are moved to +pi.
inline constexpr double kLogBranchSnap = 1e-9;

struct PrincipalLog {
  Matrix K;                  // hermitian, spectrum in [-pi, pi], e^{iK} = V
  double branch_margin = 0;  // distance from -1 to the spectrum of V
  double drift = 0;          // self-dual symmetrization correction
};

/// K = Q diag(theta) Q* with theta in (-pi, pi]. With a structure, K is made
/// exactly self-dual; SelfDualityLost if that moves it by more than 1e-6.
PrincipalLog principal_log(const Matrix& V,
                           const std::optional<DualStructure>& structure = std::nullopt,
                           double tol = kDefaultUnitaryTol);

/// phi(H) for hermitian H through its eigendecomposition.
Matrix apply_hermitian(const Matrix& H, const RealFunction& phi);

/// B_L(U,V). Anti-self-dual under #(x)# when a structure is given.
BottMatrix build_BL(const UnitaryPair& pair,
                    const std::optional<DualStructure>& structure = std::nullopt);

struct LogKappa2Result {
  Kappa2Result kappa;
  bool log_certified = false;  // delta <= kLogCertifiedDelta
};

/// Sign Pf~(B_L(U,V)). LogMethodUncertified above 1/8 unless allow_uncertified.
LogKappa2Result kappa2_log(const SelfDualPair& sd, bool allow_uncertified = false);

/// Measured ||S^2 - I|| next to an a priori bound built from commutators.
struct SquareDefect {
  double measured = 0.0;
  double bound = 0.0;
};

/// ||B^2 - I|| against 2 ||[h[V],U]|| + ||[f[V],U]||.
SquareDefect trig_square_defect(const UnitaryPair& pair);

/// ||B_L^2 - I|| against ||[h,U]|| + ||[h,U]||^2/4 + ||[h^2,U]||/2 + ||[q,U]||,
/// functions of K, q = f1 h1.
SquareDefect log_square_defect(const UnitaryPair& pair);

}  // namespace acm
