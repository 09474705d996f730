#pragma once

// Commutator bound lines eta(delta) <= m delta + b, their envelopes, beta(delta),
// the guaranteed spectral gap of B(U,V) and the certification of the homotopy
// from the standard triple to the log-method triple.

#include <optional>
#include <string>
#include <vector>

#include "acm/bott.hpp"

namespace acm {

enum class LineProvenance { TableFRow, TableHRow, Computed };

struct BoundLine {
  double m = 0.0;  // sum_k |k a_k| of the approximant
  double b = 0.0;  // certified diameter of fn - approximant
  LineProvenance provenance = LineProvenance::Computed;
  int degree = -1;  // truncation degree; -1 for the exact (infinite) row

  double operator()(double delta) const { return m * delta + b; }
};

class BoundEnvelope {
 public:
  BoundEnvelope() = default;
  explicit BoundEnvelope(std::vector<BoundLine> lines) : lines_(std::move(lines)) {}

  void add(const BoundLine& line) { lines_.push_back(line); }
  const std::vector<BoundLine>& lines() const { return lines_; }

  /// min over lines of m delta + b; +inf with no lines.
  double operator()(double delta) const;

 private:
  std::vector<BoundLine> lines_;
};

/// Line for fn against a real trig polynomial: m = sum |k a_k|, b = grid
/// diameter of fn - approx plus (fn_lipschitz + m) * spacing. The grid has
/// `grid_points` evenly spaced points on one period. Throws InvalidPolynomial
/// for complex-valued approx.
BoundLine eta_line(const RealFunction& fn, const TrigPoly& approx, double fn_lipschitz,
                   std::size_t grid_points = std::size_t{1} << 20);

/// Same, with fn itself a trig polynomial; the spacing term uses the exact
/// derivative bound of fn - approx.
BoundLine eta_line(const TrigPoly& fn, const TrigPoly& approx,
                   std::size_t grid_points = std::size_t{1} << 20);

/// The stored slope of the infinite h row, and the bound it must dominate.
inline constexpr double kHDerivativeFourierNorm = 2.99208;
inline constexpr double kHDerivativeFourierCheck = 2.992076;

/// Closed-form upper bound on sum_k |k c_k| for h (three-factor estimate).
double h_derivative_fourier_bound();

/// sum_{|k| <= K} |k c_k| with c_k from a 2^16-point quadrature of h.
double h_derivative_l1_partial(int K);

struct TableRow {
  BoundLine line;          // recomputed
  double reference_m = 0;  // reference row
  double reference_b = 0;
};

/// Rows n = 0, 1, 2 and the exact row for f (n counts sine terms kept).
/// Throws TableDrift when a recomputed value exceeds its reference by > 1e-3.
const std::vector<TableRow>& eta_table_f();
/// Rows n = 0..5 for h from the computed Fourier table plus the stored row
/// (2.99208, 0). The g rows coincide since g(x) = h(x - pi).
const std::vector<TableRow>& eta_table_h();

BoundEnvelope eta_envelope_f();
BoundEnvelope eta_envelope_h();

/// 2 eta_h(delta) + eta_f(delta).
double beta(double delta);

/// delta with beta(delta) = 1, by bisection.
double threshold_root();

struct ThresholdReport {
  double root = 0.0;
  double beta_at_certified = 0.0;  // beta(kCertifiedDelta)
  bool consistent = false;         // root within [0.2060, 0.2061]
};
ThresholdReport threshold_consistency();

struct GapBound {
  double gap = 0.0;    // sqrt(1 - beta(delta))
  double beta = 0.0;
  std::optional<double> coarse;  // (19/20) sqrt(1 - 5 delta) for delta <= 0.2
};

/// Throws NoGuarantee when beta(delta) >= 1.
GapBound guaranteed_gap(double delta);

/// (19/20) sqrt(1 - 5 delta); defined for delta in [0, 0.2].
double coarse_gap_bound(double delta);

/// min(beta(dV) + dU, beta(dV + dU)): bound on ||B(U0,V0) - B(U1,V1)|| when
/// ||U0 - U1|| <= dU and ||V0 - V1|| <= dV.
double variation_bound(double dU, double dV);

// Homotopy from the standard triple to (x/pi, 0, sqrt(1 - x^2/pi^2)).
// Stage 1 (t in [0,1]): g_t = (1-t) g, f_t = f on [-pi/2, pi/2] and
// sign(x) sqrt(1 - g_t^2) off it, h fixed. Stage 2 (t in [0,1]): g = 0,
// f_t = (1-t) fhat + t x/pi with fhat the clamped f, h_t = sqrt(1 - f_t^2).

struct PathTriple {
  double f, g, h;
};

/// Functions of the path at x; stage is 1 or 2.
PathTriple path_functions(int stage, double t, double x);

/// The function F with h_t = sqrt(1 - F^2) and q_t = F h_t.
double path_F(int stage, double t, double x);

/// f restricted to [-pi/2, pi/2], extended by sign(x).
double clamped_f(double x);

enum class CertificationStatus { Pass, CertificationFailed, MeshViolation };

struct CertificationPoint {
  int stage = 1;
  double t = 0.0;
  double g_norm = 0.0;
  double eta_h = 0.0;
  double eta_h2 = 0.0;
  double eta_q = 0.0;
  double bound = 0.0;
};

struct CertificationReport {
  double delta = 0.0;
  std::vector<CertificationPoint> points;
  std::vector<double> steps;  // sup-norm step between consecutive points
  double max_bound = 0.0;
  double max_step = 0.0;
  CertificationStatus status = CertificationStatus::Pass;
  std::string message;

  /// Columns: stage,t,g_norm,eta_h,eta_h2,eta_q,bound.
  std::string csv() const;
  /// Throws CertificationFailed or MeshViolation unless status is Pass.
  void require_pass() const;
};

struct LogPathOptions {
  int points_per_stage = 64;
  bool refine = true;          // bisect mesh steps above max_step
  double acceptance = 0.95;    // bound must stay strictly below this
  double max_step = 0.2236;    // sqrt(1 - 0.95)
  int fit_degree = 16;         // LP fit line
  int fft_degree = 24;         // truncated Fourier lines
  int certify_cells = 1 << 16; // base cells for certified offsets
  /// Explicit mesh values per stage; empty means evenly spaced.
  std::vector<double> stage1_mesh;
  std::vector<double> stage2_mesh;
};

/// Evaluates the bound at every mesh point of both stages.
CertificationReport certify_log_path(double delta, const LogPathOptions& options = {});

/// eta bounds for h_t, h_t^2 and q_t at a single path point.
CertificationPoint certify_path_point(int stage, double t, double delta,
                                      const LogPathOptions& options = {});

std::string to_string(CertificationStatus status);

}  // namespace acm
