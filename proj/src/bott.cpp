#include "acm/bott.hpp"

#include <cmath>
#include <sstream>

namespace acm {

Matrix assemble_bott_matrix(const Matrix& F, const Matrix& G, const Matrix& H,
                            const Matrix& U) {
  const Eigen::Index d = F.rows();
  if (G.rows() != d || H.rows() != d || U.rows() != d) {
    throw Error(ErrorCode::DimensionMismatch, "Bott blocks must share one dimension");
  }
  const Matrix off = G + 0.5 * (H * U.adjoint() + U.adjoint() * H);
  const Matrix off_adj = G + 0.5 * (H * U + U * H);
  Matrix B(2 * d, 2 * d);
  B.topLeftCorner(d, d) = F;
  B.topRightCorner(d, d) = off;
  B.bottomLeftCorner(d, d) = off_adj;
  B.bottomRightCorner(d, d) = -F;
  // Exact hermiticity: the two off-diagonal blocks are adjoint up to rounding.
  return 0.5 * (B + B.adjoint());
}

BottMatrix finish_bott_matrix(Matrix B, double delta, BottMethod method) {
  BottMatrix out;
  out.eigenvalues = hermitian_eig(B, 1e-8);
  out.gap = out.eigenvalues.cwiseAbs().minCoeff();
  out.B = std::move(B);
  out.delta = delta;
  out.method = method;
  return out;
}

BottMatrix build_B(const UnitaryPair& pair, bool use_trigpoly) {
  if (use_trigpoly) {
    const StandardTriple& t = standard_triple();
    const double tol = pair.unitary_tol();
    auto herm = [](const Matrix& X) -> Matrix { return 0.5 * (X + X.adjoint()); };
    const Matrix F = herm(apply_trigpoly(t.f5, pair.V(), tol));
    const Matrix G = herm(apply_trigpoly(t.g5, pair.V(), tol));
    const Matrix H = herm(apply_trigpoly(t.h5, pair.V(), tol));
    return finish_bott_matrix(assemble_bott_matrix(F, G, H, pair.U()), pair.delta(),
                              BottMethod::TrigPoly5);
  }
  const UnitaryEigen eig = unitary_eig(pair.V(), pair.unitary_tol());
  const Matrix F = apply_periodic(eig, eval_f);
  const Matrix G = apply_periodic(eig, eval_g);
  const Matrix H = apply_periodic(eig, eval_h);
  return finish_bott_matrix(assemble_bott_matrix(F, G, H, pair.U()), pair.delta(),
                            BottMethod::Trig);
}

double default_gap_tol(Eigen::Index dim) { return 1e-8 * static_cast<double>(dim); }

int signature_from_eigenvalues(const RealVector& eigenvalues, double gap_tol) {
  int sig = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (std::abs(lambda) < gap_tol) {
      std::ostringstream os;
      os << "eigenvalue " << lambda << " lies within " << gap_tol << " of zero";
      throw Error(ErrorCode::GapClosed, os.str());
    }
    sig += lambda > 0 ? 1 : -1;
  }
  return sig;
}

int signature(const Matrix& H, std::optional<double> gap_tol) {
  const RealVector ev = hermitian_eig(H, 1e-8);
  return signature_from_eigenvalues(ev, gap_tol.value_or(default_gap_tol(H.rows())));
}

double measured_gap(const BottMatrix& B) { return B.gap; }

BottIndexResult bott_index(const UnitaryPair& pair, const BottIndexOptions& options) {
  BottIndexResult out;
  out.delta = pair.delta();
  out.certified = out.delta <= kCertifiedDelta;
  if (!out.certified && !options.allow_uncertified) {
    std::ostringstream os;
    os << "||[U,V]|| = " << out.delta << " exceeds " << kCertifiedDelta;
    throw Error(ErrorCode::ThresholdExceeded, os.str());
  }
  const BottMatrix B = build_B(pair, options.use_trigpoly);
  out.gap = B.gap;
  out.signature = signature_from_eigenvalues(
      B.eigenvalues, options.gap_tol.value_or(default_gap_tol(B.B.rows())));
  if (out.signature % 2 != 0) {
    throw Error(ErrorCode::NumericalInconsistency, "odd signature of a Bott matrix");
  }
  out.kappa = out.signature / 2;
  return out;
}

}  // namespace acm
