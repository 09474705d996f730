#include "acm/logmethod.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace acm {

namespace {

constexpr double kPi = std::numbers::pi;

double h1(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x / (kPi * kPi))); }

struct LogFunctions {
  Matrix F, H;
};

LogFunctions log_functions(const Matrix& K, const std::optional<DualStructure>& structure) {
  LogFunctions out;
  out.F = K / kPi;
  out.H = apply_hermitian(K, h1);
  if (structure) out.H = structure->symmetrize(out.H);
  return out;
}

}  // namespace

Matrix apply_hermitian(const Matrix& H, const RealFunction& phi) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalInconsistency, "hermitian eigensolver failed");
  }
  RealVector values = es.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) values(i) = phi(values(i));
  const Matrix& Q = es.eigenvectors();
  const Matrix out = Q * values.cast<Complex>().asDiagonal() * Q.adjoint();
  return 0.5 * (out + out.adjoint());
}

PrincipalLog principal_log(const Matrix& V, const std::optional<DualStructure>& structure,
                           double tol) {
  UnitaryEigen eig = unitary_eig(V, tol);
  PrincipalLog out;
  out.branch_margin = 2.0;
  for (Eigen::Index j = 0; j < eig.dim(); ++j) {
    double& theta = eig.angles(j);
    if (theta < -kPi + kLogBranchSnap) theta = kPi;
    out.branch_margin = std::min(out.branch_margin, std::abs(std::polar(1.0, theta) + 1.0));
  }
  out.K = eig.Q * eig.angles.cast<Complex>().asDiagonal() * eig.Q.adjoint();
  out.K = 0.5 * (out.K + out.K.adjoint());

  if (structure) {
    const Matrix Ks = structure->symmetrize(out.K);
    out.drift = (out.K - Ks).cwiseAbs().maxCoeff();
    if (out.drift > 1e-6) {
      std::ostringstream os;
      os << "self-dual symmetrization of log V moved it by " << out.drift;
      throw Error(ErrorCode::SelfDualityLost, os.str());
    }
    out.K = Ks;
  }

  const Matrix expK = [&] {
    Eigen::SelfAdjointEigenSolver<Matrix> es(out.K);
    Eigen::VectorXcd e(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = std::polar(1.0, es.eigenvalues()(i));
    return Matrix(es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint());
  }();
  const double err = (expK - V).cwiseAbs().maxCoeff();
  if (err > 1e-8 * std::sqrt(static_cast<double>(V.rows()))) {
    std::ostringstream os;
    os << "exp(iK) misses V by " << err;
    throw Error(ErrorCode::NumericalInconsistency, os.str());
  }
  return out;
}

BottMatrix build_BL(const UnitaryPair& pair, const std::optional<DualStructure>& structure) {
  const PrincipalLog log = principal_log(pair.V(), structure, pair.unitary_tol());
  const LogFunctions fn = log_functions(log.K, structure);
  const Eigen::Index d = pair.dim();
  Matrix B = assemble_bott_matrix(fn.F, Matrix::Zero(d, d), fn.H, pair.U());
  if (structure) B = 0.5 * (B - structure->dual_tensor(B));
  return finish_bott_matrix(std::move(B), pair.delta(), BottMethod::Log);
}

LogKappa2Result kappa2_log(const SelfDualPair& sd, bool allow_uncertified) {
  LogKappa2Result out;
  out.log_certified = sd.delta() <= kLogCertifiedDelta;
  if (!out.log_certified && !allow_uncertified) {
    std::ostringstream os;
    os << "||[U,V]|| = " << sd.delta() << " exceeds " << kLogCertifiedDelta;
    throw Error(ErrorCode::LogMethodUncertified, os.str());
  }
  const BottMatrix B = build_BL(sd.pair(), sd.structure());
  out.kappa = pfaffian_sign(B.B, B.eigenvalues, sd.structure());
  out.kappa.delta = sd.delta();
  out.kappa.certified = sd.delta() <= kCertifiedDelta;
  return out;
}

SquareDefect trig_square_defect(const UnitaryPair& pair) {
  const BottMatrix B = build_B(pair);
  const UnitaryEigen eig = unitary_eig(pair.V(), pair.unitary_tol());
  const Matrix F = apply_periodic(eig, eval_f);
  const Matrix H = apply_periodic(eig, eval_h);
  SquareDefect out;
  const Eigen::Index n = B.B.rows();
  out.measured = operator_norm(B.B * B.B - Matrix::Identity(n, n));
  out.bound = 2.0 * commutator_norm(H, pair.U()) + commutator_norm(F, pair.U());
  return out;
}

SquareDefect log_square_defect(const UnitaryPair& pair) {
  const BottMatrix B = build_BL(pair);
  const PrincipalLog log = principal_log(pair.V(), std::nullopt, pair.unitary_tol());
  const Matrix H = apply_hermitian(log.K, h1);
  const Matrix H2 = apply_hermitian(log.K, [](double x) { return 1.0 - x * x / (kPi * kPi); });
  const Matrix Qf = apply_hermitian(log.K, [](double x) { return x / kPi * h1(x); });
  const double eta_h = commutator_norm(H, pair.U());
  SquareDefect out;
  const Eigen::Index n = B.B.rows();
  out.measured = operator_norm(B.B * B.B - Matrix::Identity(n, n));
  out.bound = eta_h + 0.25 * eta_h * eta_h + 0.5 * commutator_norm(H2, pair.U()) +
              commutator_norm(Qf, pair.U());
  return out;
}

}  // namespace acm
