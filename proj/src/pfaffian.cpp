#include "acm/pfaffian.hpp"

#include <cmath>
#include <limits>

namespace acm {

Complex PfaffianValue::value() const {
  if (std::isinf(log_abs) && log_abs < 0) return {0.0, 0.0};
  return phase * std::exp(log_abs);
}

double skew_symmetry_defect(const Matrix& A) {
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return (A + A.transpose()).cwiseAbs().maxCoeff() / scale;
}

void require_skew_symmetric(const Matrix& A, double tol) {
  require_square_finite(A);
  if (A.rows() % 2 != 0) {
    throw Error(ErrorCode::OddDimension, "Pfaffian needs an even dimension");
  }
  const double defect = skew_symmetry_defect(A);
  if (defect > tol) {
    throw Error(ErrorCode::NotSkewSymmetric,
                "||A + A^T|| / ||A|| = " + std::to_string(defect));
  }
}

namespace {

struct Accumulator {
  double log_abs = 0.0;
  Complex phase{1.0, 0.0};
  bool zero = false;

  void mul(Complex z) {
    const double a = std::abs(z);
    if (a == 0.0) {
      zero = true;
      return;
    }
    log_abs += std::log(a);
    phase *= z / a;
  }

  PfaffianValue result() const {
    PfaffianValue out;
    if (zero) {
      out.log_abs = -std::numeric_limits<double>::infinity();
      out.phase = 0.0;
      return out;
    }
    out.log_abs = log_abs;
    out.phase = phase / std::abs(phase);
    return out;
  }
};

}  // namespace

PfaffianValue pfaffian_householder(const Matrix& A_in, double tol) {
  require_skew_symmetric(A_in, tol);
  const Eigen::Index n = A_in.rows();
  Matrix A = 0.5 * (A_in - A_in.transpose());
  Accumulator acc;

  for (Eigen::Index i = 0; i + 2 < n; ++i) {
    const Eigen::Index m = n - i - 1;
    Eigen::VectorXcd x = A.col(i).tail(m);
    const double sigma = x.tail(m - 1).squaredNorm();
    Complex alpha = x(0);
    if (sigma != 0.0) {
      const double norm_x = std::sqrt(std::norm(x(0)) + sigma);
      const Complex phase = x(0) == 0.0 ? Complex(1.0) : x(0) / std::abs(x(0));
      Eigen::VectorXcd v = x;
      v(0) += phase * norm_x;
      v /= v.norm();
      alpha = -phase * norm_x;

      // A' = P^T A P restricted to the trailing block, P = I - 2 v v^H.
      const Eigen::VectorXcd w = 2.0 * (A.bottomRightCorner(m, m) * v.conjugate());
      A.bottomRightCorner(m, m) += v * w.transpose() - w * v.transpose();
      acc.mul(-1.0);  // det(P) = -1
    }
    A(i + 1, i) = alpha;
    A(i, i + 1) = -alpha;
    A.col(i).tail(m - 1).setZero();
    A.row(i).tail(m - 1).setZero();
    if (i % 2 == 0) acc.mul(-alpha);
  }
  acc.mul(A(n - 2, n - 1));
  return acc.result();
}

Complex pfaffian_parlett_reid(const Matrix& A_in, double tol) {
  require_skew_symmetric(A_in, tol);
  const Eigen::Index n = A_in.rows();
  Matrix A = 0.5 * (A_in - A_in.transpose());
  Complex pf(1.0, 0.0);

  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index rel = 0;
    A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&rel);
    const Eigen::Index kp = k + 1 + rel;
    if (kp != k + 1) {
      A.row(k + 1).swap(A.row(kp));
      A.col(k + 1).swap(A.col(kp));
      pf = -pf;
    }
    if (A(k + 1, k) == 0.0) return {0.0, 0.0};
    pf *= A(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index r = n - k - 2;
      const Eigen::VectorXcd tau = A.row(k).tail(r).transpose() / A(k, k + 1);
      const Eigen::VectorXcd col = A.col(k + 1).tail(r);
      A.bottomRightCorner(r, r) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Complex pfaffian(const Matrix& A, double tol) { return pfaffian_householder(A, tol).value(); }

}  // namespace acm
