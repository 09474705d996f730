#include "acm/selfdual.hpp"

#include <cmath>
#include <sstream>

namespace acm {

namespace {

Eigen::Index half_dim(const Matrix& X, Eigen::Index parts) {
  if (X.rows() != X.cols() || X.rows() == 0 || X.rows() % parts != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension " + std::to_string(X.rows()) + " is not a multiple of " +
                    std::to_string(parts));
  }
  return X.rows() / parts;
}

double scale_of(const Matrix& X) { return std::max(1.0, operator_norm(X)); }

}  // namespace

DualStructure::DualStructure(Eigen::Index N) : N_(N) {
  if (N <= 0) throw Error(ErrorCode::DimensionMismatch, "N must be positive");
  Z_ = Matrix::Zero(2 * N, 2 * N);
  Z_.topRightCorner(N, N).setIdentity();
  Z_.bottomLeftCorner(N, N) = -Matrix::Identity(N, N);

  const Complex i(0.0, 1.0);
  const Eigen::Index n2 = 2 * N;
  Q_.resize(2 * n2, 2 * n2);
  Q_.topLeftCorner(n2, n2).setIdentity();
  Q_.topRightCorner(n2, n2) = -i * Z_;
  Q_.bottomLeftCorner(n2, n2) = i * Z_;
  Q_.bottomRightCorner(n2, n2).setIdentity();
  Q_ /= std::sqrt(2.0);
}

Matrix DualStructure::dual(const Matrix& X) const {
  if (X.rows() != 2 * N_ || X.cols() != 2 * N_) {
    throw Error(ErrorCode::DimensionMismatch, "dual expects a 2N x 2N matrix");
  }
  const Eigen::Index n = N_;
  Matrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = X.bottomRightCorner(n, n).transpose();
  out.topRightCorner(n, n) = -X.topRightCorner(n, n).transpose();
  out.bottomLeftCorner(n, n) = -X.bottomLeftCorner(n, n).transpose();
  out.bottomRightCorner(n, n) = X.topLeftCorner(n, n).transpose();
  return out;
}

Matrix DualStructure::dual_tensor(const Matrix& X) const {
  if (X.rows() != 4 * N_ || X.cols() != 4 * N_) {
    throw Error(ErrorCode::DimensionMismatch, "dual_tensor expects a 4N x 4N matrix");
  }
  const Eigen::Index m = 2 * N_;
  Matrix out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = dual(X.bottomRightCorner(m, m));
  out.topRightCorner(m, m) = -dual(X.topRightCorner(m, m));
  out.bottomLeftCorner(m, m) = -dual(X.bottomLeftCorner(m, m));
  out.bottomRightCorner(m, m) = dual(X.topLeftCorner(m, m));
  return out;
}

double DualStructure::self_duality_defect(const Matrix& X) const {
  return operator_norm(X - dual(X));
}

Matrix DualStructure::symmetrize(const Matrix& X) const { return 0.5 * (X + dual(X)); }

Matrix dual(const Matrix& X) { return DualStructure(half_dim(X, 2)).dual(X); }

Matrix dual_tensor(const Matrix& X) { return DualStructure(half_dim(X, 4)).dual_tensor(X); }

double pair_self_duality_defect(const Matrix& U, const Matrix& V) {
  const DualStructure s(half_dim(U, 2));
  return std::max(s.self_duality_defect(U), s.self_duality_defect(V));
}

SelfDualPair::SelfDualPair(UnitaryPair pair, double tol)
    : pair_(std::move(pair)), structure_(half_dim(pair_.U(), 2)) {
  const double du = structure_.self_duality_defect(pair_.U());
  const double dv = structure_.self_duality_defect(pair_.V());
  violation_ = std::max(du, dv);
  if (du > tol * scale_of(pair_.U()) || dv > tol * scale_of(pair_.V())) {
    std::ostringstream os;
    os << "||U - U^#|| = " << du << ", ||V - V^#|| = " << dv;
    throw Error(ErrorCode::NotSelfDual, os.str());
  }
}

PfaffianValue modified_pfaffian(const Matrix& X, const DualStructure& structure, double tol) {
  const double defect = operator_norm(X + structure.dual_tensor(X));
  if (defect > tol * scale_of(X)) {
    std::ostringstream os;
    os << "||X + X^{#(x)#}|| = " << defect;
    throw Error(ErrorCode::NotAntiSelfDual, os.str());
  }
  Matrix M = structure.Q().adjoint() * X * structure.Q();
  M = 0.5 * (M - M.transpose());
  return pfaffian_householder(M);
}

PfaffianValue modified_pfaffian(const Matrix& X, double tol) {
  return modified_pfaffian(X, DualStructure(half_dim(X, 4)), tol);
}

SelfDualBott build_selfdual_B(const SelfDualPair& sd, bool use_trigpoly) {
  const DualStructure& s = sd.structure();
  const UnitaryPair& p = sd.pair();
  double drift = 0.0;
  auto sym = [&](const Matrix& X) -> Matrix {
    const Matrix Y = s.symmetrize(X);
    drift = std::max(drift, (X - Y).cwiseAbs().maxCoeff());
    return Y;
  };

  Matrix F, G, H;
  if (use_trigpoly) {
    const StandardTriple& t = standard_triple();
    auto herm = [](const Matrix& X) -> Matrix { return 0.5 * (X + X.adjoint()); };
    F = sym(herm(apply_trigpoly(t.f5, p.V(), p.unitary_tol())));
    G = sym(herm(apply_trigpoly(t.g5, p.V(), p.unitary_tol())));
    H = sym(herm(apply_trigpoly(t.h5, p.V(), p.unitary_tol())));
  } else {
    const UnitaryEigen eig = unitary_eig(p.V(), p.unitary_tol());
    F = sym(apply_periodic(eig, eval_f));
    G = sym(apply_periodic(eig, eval_g));
    H = sym(apply_periodic(eig, eval_h));
  }
  Matrix B = assemble_bott_matrix(F, G, H, p.U());
  const Matrix B_sym = 0.5 * (B - s.dual_tensor(B));
  drift = std::max(drift, (B - B_sym).cwiseAbs().maxCoeff());

  SelfDualBott out;
  out.bott = finish_bott_matrix(B_sym, p.delta(),
                                use_trigpoly ? BottMethod::TrigPoly5 : BottMethod::Trig);
  out.drift = drift;
  return out;
}

Kappa2Result pfaffian_sign(const Matrix& B, const RealVector& eigenvalues,
                           const DualStructure& structure) {
  Kappa2Result out;
  const PfaffianValue pf = modified_pfaffian(B, structure);
  if (std::isinf(pf.log_abs)) {
    throw Error(ErrorCode::GapClosed, "modified Pfaffian vanishes");
  }
  out.gap = eigenvalues.cwiseAbs().minCoeff();
  out.log_abs_pfaffian = pf.log_abs;
  out.imag_ratio = std::abs(pf.phase.imag());
  if (out.imag_ratio > 1e-6) {
    throw Error(ErrorCode::NumericalInconsistency,
                "modified Pfaffian is not real (|Im|/|Pf| = " + std::to_string(out.imag_ratio) + ")");
  }
  out.kappa2 = pf.phase.real() > 0 ? 1 : -1;

  // Pf^2 = det B = prod lambda_i.
  double log_det = 0.0;
  int negatives = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    log_det += std::log(std::abs(eigenvalues(i)));
    if (eigenvalues(i) < 0) ++negatives;
  }
  const double dim = static_cast<double>(eigenvalues.size());
  if (negatives % 2 != 0 || std::abs(2.0 * pf.log_abs - log_det) > 1e-7 * dim * (1.0 + std::abs(log_det))) {
    throw Error(ErrorCode::NumericalInconsistency, "Pf^2 disagrees with det B");
  }
  // |Pf| >= gap^{dim/2}; a gap at roundoff level leaves the sign meaningless.
  const double floor_log = 0.5 * dim * std::log(out.gap);
  out.ill_conditioned = out.gap < default_gap_tol(eigenvalues.size()) ||
                        pf.log_abs < floor_log - 1e-7 * dim * (1.0 + std::abs(floor_log));
  return out;
}

Kappa2Result pfaffian_bott_index(const SelfDualPair& sd, const Kappa2Options& options) {
  const double delta = sd.delta();
  const bool certified = delta <= kCertifiedDelta;
  if (!certified && !options.allow_uncertified) {
    std::ostringstream os;
    os << "||[U,V]|| = " << delta << " exceeds " << kCertifiedDelta;
    throw Error(ErrorCode::ThresholdExceeded, os.str());
  }
  const SelfDualBott b = build_selfdual_B(sd, options.use_trigpoly);
  Kappa2Result out = pfaffian_sign(b.bott.B, b.bott.eigenvalues, sd.structure());
  out.certified = certified;
  out.delta = delta;
  out.drift = b.drift;
  return out;
}

double selfdual_distance_bound(double delta_a, double delta_b) {
  for (double d : {delta_a, delta_b}) {
    if (!(d >= 0.0 && d <= kCertifiedDelta)) {
      throw Error(ErrorCode::ThresholdExceeded,
                  "commutator norm " + std::to_string(d) + " outside [0, " +
                      std::to_string(kCertifiedDelta) + "]");
    }
  }
  return 0.2 * std::sqrt(1.0 - 5.0 * delta_a * delta_a) +
         0.2 * std::sqrt(1.0 - 5.0 * delta_b * delta_b);
}

double selfdual_commuting_distance_bound(double delta) {
  return selfdual_distance_bound(delta, 0.0);
}

double selfdual_distance_bounds(const SelfDualPair& a, const SelfDualPair& b) {
  const Kappa2Result ka = pfaffian_bott_index(a);
  const Kappa2Result kb = pfaffian_bott_index(b);
  if (ka.kappa2 == kb.kappa2) {
    throw Error(ErrorCode::NoObstruction, "both pairs have the same kappa_2");
  }
  return selfdual_distance_bound(a.delta(), b.delta());
}

bool check_kramers(const Matrix& H, double tol) {
  const DualStructure s(half_dim(H, 2));
  const double scale = scale_of(H);
  if (!is_hermitian(H, 1e-9 * scale)) {
    throw Error(ErrorCode::NotHermitian, "Kramers check needs a hermitian matrix");
  }
  const double defect = s.self_duality_defect(H);
  if (defect > 1e-9 * scale) {
    throw Error(ErrorCode::NotSelfDual, "||H - H^#|| = " + std::to_string(defect));
  }
  const RealVector ev = hermitian_eig(0.5 * (H + H.adjoint()), 1e-9 * scale);
  for (Eigen::Index k = 0; k + 1 < ev.size(); k += 2) {
    if (std::abs(ev(k + 1) - ev(k)) > tol * scale) return false;
  }
  return true;
}

}  // namespace acm
