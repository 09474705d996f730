#pragma once

// The standard triple (f, g, h), its Fourier data, the Bott matrix B(U,V)
// and the signature-based Bott index kappa.

#include <optional>
#include <vector>

#include "acm/linalg.hpp"

namespace acm {

/// Commutator norm up to which kappa and kappa_2 are certified.
inline constexpr double kCertifiedDelta = 0.206007;

/// f(x) = (150 sin x + 25 sin 3x + 3 sin 5x) / 128.
double eval_f(double x);
/// sqrt(1 - f^2) off [-pi/2, pi/2], zero on it.
double eval_g(double x);
/// sqrt(1 - f^2) on [-pi/2, pi/2], zero off it.
double eval_h(double x);

/// sqrt(407/512) |cos x|^3 sqrt(1 + 96/407 cos 2x + 9/407 cos 4x), which equals
/// sqrt(1 - f(x)^2) everywhere.
double standard_envelope(double x);

/// Bound on |h'| and |g'|.
inline constexpr double kStandardHLipschitz = 150.0 / 128.0;

struct FourierTable {
  std::vector<double> c;        // c_0 .. c_max_n, cosine coefficients of h
  double series_tail_bound = 0; // bound on the dropped binomial-series terms
  double quadrature_error = 0;  // summed error estimates of the kept terms
  int series_K = 0;
  bool certified = false;       // total error <= 1e-6 with series_K >= 7

  /// b_n = (-1)^n c_n, cosine coefficients of g.
  double b(int n) const { return (n % 2 == 0) ? c[n] : -c[n]; }
};

/// Fourier coefficients c_n = (1/2pi) int h(x) cos(nx) dx via the binomial
/// expansion of the square-root factor, truncated after series_K + 1 terms,
/// each term integrated by adaptive Gauss-Kronrod. `certified` is false when
/// series_K < 7 or the error budget exceeds 1e-6.
FourierTable fourier_coefficients_h(int max_n = 5, int series_K = 7);

/// Exact coefficients of f, as a degree-5 trig polynomial.
TrigPoly f_trigpoly();

/// The standard triple with closed-form evaluators and degree-5 approximants
/// (h5, g5 from the computed Fourier table).
struct StandardTriple {
  TrigPoly f5;
  TrigPoly g5;
  TrigPoly h5;
  FourierTable table;

  static double f(double x) { return eval_f(x); }
  static double g(double x) { return eval_g(x); }
  static double h(double x) { return eval_h(x); }
};

/// Process-wide immutable instance.
const StandardTriple& standard_triple();

enum class BottMethod { Trig, TrigPoly5, Log };

struct BottMatrix {
  Matrix B;             // 2d x 2d hermitian
  double delta = 0.0;   // ||[U,V]|| of the input pair
  double gap = 0.0;     // min |eigenvalue|
  RealVector eigenvalues;
  BottMethod method = BottMethod::Trig;
};

/// [[F, G + {H,U*}/2], [G + {H,U}/2, -F]] for hermitian F, G, H. With U*
/// in the upper block, Sig/2 equals the winding number omega(U,V).
Matrix assemble_bott_matrix(const Matrix& F, const Matrix& G, const Matrix& H,
                            const Matrix& U);

/// B(U,V) from the closed-form triple (default) or the degree-5 approximants.
BottMatrix build_B(const UnitaryPair& pair, bool use_trigpoly = false);

/// Fills gap and eigenvalues from an assembled matrix.
BottMatrix finish_bott_matrix(Matrix B, double delta, BottMethod method);

/// Default gap tolerance for signatures: 1e-8 * dim.
double default_gap_tol(Eigen::Index dim);

/// #positive - #negative eigenvalues. Throws GapClosed when an eigenvalue
/// lies in (-gap_tol, gap_tol).
int signature(const Matrix& H, std::optional<double> gap_tol = std::nullopt);
int signature_from_eigenvalues(const RealVector& eigenvalues, double gap_tol);

double measured_gap(const BottMatrix& B);

struct BottIndexOptions {
  bool allow_uncertified = false;
  bool use_trigpoly = false;
  std::optional<double> gap_tol;
};

struct BottIndexResult {
  int kappa = 0;
  int signature = 0;
  bool certified = false;  // delta <= kCertifiedDelta
  double gap = 0.0;
  double delta = 0.0;
};

/// kappa = Sig(B(U,V)) / 2. Above kCertifiedDelta throws ThresholdExceeded
/// unless allow_uncertified is set, in which case the result is flagged.
/// Throws NumericalInconsistency for an odd signature.
BottIndexResult bott_index(const UnitaryPair& pair, const BottIndexOptions& options = {});

}  // namespace acm
