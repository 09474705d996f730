#include "acm/winding.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

namespace acm {

namespace {

constexpr double kPi = std::numbers::pi;

void require_defined(double delta) {
  if (!(delta <= 2.0 - kWindingDeltaMargin)) {
    throw Error(ErrorCode::InvariantUndefined,
                "||[U,V]|| = " + std::to_string(delta) + " is not below 2");
  }
}

Matrix group_commutator(const UnitaryPair& pair) {
  return pair.V() * pair.U() * pair.V().adjoint() * pair.U().adjoint();
}

}  // namespace

WindingResult winding_number(const UnitaryPair& pair) {
  require_defined(pair.delta());
  const Matrix W = group_commutator(pair);
  // W is unitary up to the pair's own tolerance, amplified by four products.
  const UnitaryEigen eig = unitary_eig(W, 4.0 * pair.unitary_tol() + 1e-12);

  WindingResult out;
  out.delta = pair.delta();
  out.valid = true;
  double sum = 0.0;
  double gap = 2.0;
  for (Eigen::Index j = 0; j < eig.dim(); ++j) {
    sum += eig.angles(j);
    gap = std::min(gap, std::abs(std::polar(1.0, eig.angles(j)) + 1.0));
  }
  out.raw = sum / (2.0 * kPi);
  out.min_angle_gap_at_pi = gap;
  const double rounded = std::round(out.raw);
  if (std::abs(out.raw - rounded) > kWindingRoundingTol) {
    throw Error(ErrorCode::NumericalInconsistency,
                "trace-log value " + std::to_string(out.raw) + " is not near an integer");
  }
  out.omega = static_cast<int>(rounded);
  return out;
}

int winding_via_path(const UnitaryPair& pair, int steps) {
  require_defined(pair.delta());
  if (steps < 64) steps = 64;
  const Matrix W = group_commutator(pair);
  Eigen::MatrixPower<Matrix> power(W);

  for (int attempt = 0; attempt < 8; ++attempt, steps *= 2) {
    double total = 0.0;
    double max_jump = 0.0;
    double prev_phase = 0.0;  // det(W^0) = 1
    for (int s = 1; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      Matrix Wt(W.rows(), W.cols());
      power.compute(Wt, t);
      const double phase = std::arg(Wt.partialPivLu().determinant());
      const double jump = std::remainder(phase - prev_phase, 2.0 * kPi);
      max_jump = std::max(max_jump, std::abs(jump));
      total += jump;
      prev_phase = phase;
    }
    if (max_jump < kPi / 2) {
      const double winds = total / (2.0 * kPi);
      if (std::abs(winds - std::round(winds)) > kWindingRoundingTol) {
        throw Error(ErrorCode::NumericalInconsistency, "determinant path does not close");
      }
      return static_cast<int>(std::round(winds));
    }
  }
  throw Error(ErrorCode::MeshTooCoarse, "phase increments stayed above pi/2");
}

double commuting_distance_bound(double delta) {
  if (!(delta >= 0.0 && delta <= 2.0)) {
    throw Error(ErrorCode::InvariantUndefined, "commutator norm outside [0, 2]");
  }
  return 1.0 + std::sqrt(std::max(0.0, 1.0 - 0.25 * delta * delta));
}

double distance_bound_commuting(const UnitaryPair& pair) {
  const WindingResult w = winding_number(pair);
  if (w.omega == 0) {
    throw Error(ErrorCode::NoObstruction, "omega = 0; no distance bound to commuting pairs");
  }
  return commuting_distance_bound(pair.delta());
}

double index_change_distance_bound(double delta_a, double delta_b) {
  if (!(delta_a >= 0.0 && delta_a <= 2.0 && delta_b >= 0.0 && delta_b <= 2.0)) {
    throw Error(ErrorCode::InvariantUndefined, "commutator norm outside [0, 2]");
  }
  auto term = [](double d) { return std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d)); };
  return term(delta_a) + term(delta_b);
}

double distance_bound_index_change(const UnitaryPair& a, const UnitaryPair& b) {
  const WindingResult wa = winding_number(a);
  const WindingResult wb = winding_number(b);
  if (wa.omega == wb.omega) {
    throw Error(ErrorCode::NoObstruction, "both pairs have the same winding number");
  }
  return index_change_distance_bound(a.delta(), b.delta());
}

}  // namespace acm
