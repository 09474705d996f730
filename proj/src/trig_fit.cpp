#include "acm/trig_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acm {

namespace {

// Revised simplex on [A | artificials] with the basis refactorized every
// iteration; the basis has only as many rows as the LP has constraints.
class RevisedSimplex {
 public:
  RevisedSimplex(Eigen::MatrixXd A, Eigen::VectorXd b, std::vector<Eigen::Index> basis)
      : A_(std::move(A)), b_(std::move(b)), basis_(std::move(basis)) {}

  const std::vector<Eigen::Index>& basis() const { return basis_; }
  std::vector<Eigen::Index>& basis() { return basis_; }
  const Eigen::MatrixXd& A() const { return A_; }

  Eigen::VectorXd basic_values() const { return factor().solve(b_); }

  Eigen::VectorXd duals(const Eigen::VectorXd& cost) const {
    Eigen::VectorXd cb(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) cb(i) = cost(basis_[i]);
    return factor().transpose().solve(cb);
  }

  // Minimizes cost over columns [0, allowed) that are not basic. Returns
  // false if unbounded.
  bool optimize(const Eigen::VectorXd& cost, Eigen::Index allowed, int max_iterations,
                int& iterations) {
    const double scale = 1.0 + cost.cwiseAbs().maxCoeff();
    int stall = 0;
    bool bland = false;
    double last = std::numeric_limits<double>::infinity();
    while (true) {
      if (++iterations > max_iterations) {
        throw Error(ErrorCode::NumericalInconsistency, "simplex iteration limit reached");
      }
      const Eigen::PartialPivLU<Eigen::MatrixXd> lu = factor();
      Eigen::VectorXd cb(basis_.size());
      for (std::size_t i = 0; i < basis_.size(); ++i) cb(i) = cost(basis_[i]);
      const Eigen::VectorXd y = lu.transpose().solve(cb);
      const Eigen::VectorXd xb = lu.solve(b_);
      const double objective = cb.dot(xb);
      stall = objective < last - 1e-12 * scale ? 0 : stall + 1;
      bland = bland || stall > 500;
      last = std::min(last, objective);

      const Eigen::VectorXd reduced =
          cost.head(allowed) - A_.leftCols(allowed).transpose() * y;
      Eigen::Index enter = -1;
      double best = -1e-10 * scale;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (reduced(j) < best) {
          enter = j;
          if (bland) break;
          best = reduced(j);
        }
      }
      if (enter < 0) return true;

      const Eigen::VectorXd dir = lu.solve(A_.col(enter));
      const double dir_tol = 1e-9 * std::max(1.0, dir.cwiseAbs().maxCoeff());
      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < dir.size(); ++i) {
        if (dir(i) <= dir_tol) continue;
        const double q = std::max(0.0, xb(i)) / dir(i);
        if (q < ratio - 1e-13 ||
            (q <= ratio + 1e-13 && leave >= 0 && basis_[i] < basis_[leave])) {
          ratio = q;
          leave = i;
        }
      }
      if (leave < 0) return false;
      basis_[leave] = enter;
    }
  }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> factor() const {
    Eigen::MatrixXd B(A_.rows(), static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) B.col(i) = A_.col(basis_[i]);
    return Eigen::PartialPivLU<Eigen::MatrixXd>(B);
  }

  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpSolution solve_standard_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c, int max_iterations) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (b.size() != m || c.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "LP data sizes disagree");
  }

  // Rows are sign-flipped so b >= 0; artificial columns n..n+m-1 start basic.
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(m);
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(m, n + m);
  Eigen::VectorXd rhs(m);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) sign(i) = -1.0;
    full.row(i).head(n) = sign(i) * A.row(i);
    full(i, n + i) = 1.0;
    rhs(i) = sign(i) * b(i);
    basis[i] = n + i;
  }

  RevisedSimplex lp(std::move(full), rhs, std::move(basis));
  LpSolution out;
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setOnes();
  if (!lp.optimize(phase1, n, max_iterations, out.iterations)) {
    throw Error(ErrorCode::NumericalInconsistency, "phase 1 unbounded");
  }
  {
    const Eigen::VectorXd xb = lp.basic_values();
    double infeas = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (lp.basis()[i] >= n) infeas += std::abs(xb(i));
    }
    if (infeas > 1e-8 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
      throw Error(ErrorCode::NumericalInconsistency, "LP is infeasible");
    }
  }
  // Swap zero-level artificials for structural columns where the basis stays
  // nonsingular.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lp.basis()[i] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::find(lp.basis().begin(), lp.basis().end(), j) != lp.basis().end()) continue;
      const Eigen::Index old = lp.basis()[i];
      lp.basis()[i] = j;
      Eigen::MatrixXd B(m, m);
      for (Eigen::Index k = 0; k < m; ++k) B.col(k) = lp.A().col(lp.basis()[k]);
      if (std::abs(Eigen::FullPivLU<Eigen::MatrixXd>(B).rcond()) > 1e-10) break;
      lp.basis()[i] = old;
    }
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = c;
  if (!lp.optimize(phase2, n, max_iterations, out.iterations)) {
    throw Error(ErrorCode::NumericalInconsistency, "LP is unbounded");
  }

  out.x = Eigen::VectorXd::Zero(n);
  const Eigen::VectorXd xb = lp.basic_values();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lp.basis()[i] < n) out.x(lp.basis()[i]) = std::max(0.0, xb(i));
  }
  out.objective = c.dot(out.x);
  out.dual = sign.cwiseProduct(lp.duals(phase2));
  return out;
}

TrigPoly minimax_line_fit(const std::vector<double>& x, const std::vector<double>& values,
                          FitBasis basis, int degree, double delta) {
  if (x.size() != values.size() || x.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "fit needs matching, nonempty samples");
  }
  if (degree < 1) throw Error(ErrorCode::InvalidPolynomial, "fit degree must be positive");
  const Eigen::Index M = static_cast<Eigen::Index>(x.size());
  const Eigen::Index N = degree;

  // Primal variables y = (a_1..a_N, u_1..u_N, hi, lo), all free, with
  // p(x) = sum a_k phi_k(x), phi_k = 2cos(kx) or 2sin(kx). Minimize
  // delta * sum 2k u_k + hi - lo subject to G y >= r:
  //   p(x_i) + hi >= v_i,  -p(x_i) - lo >= -v_i,  u - a >= 0,  u + a >= 0.
  // The LP actually solved is its dual: max r^T lambda, G^T lambda = cost,
  // lambda >= 0, whose multipliers recover y.
  const Eigen::Index nv = 2 * N + 2;
  const Eigen::Index nc = 2 * M + 2 * N;
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(nc, nv);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(nc);
  for (Eigen::Index i = 0; i < M; ++i) {
    for (Eigen::Index k = 1; k <= N; ++k) {
      const double phi = basis == FitBasis::Cosine ? 2.0 * std::cos(k * x[i])
                                                   : 2.0 * std::sin(k * x[i]);
      G(i, k - 1) = phi;
      G(M + i, k - 1) = -phi;
    }
    G(i, 2 * N) = 1.0;
    G(M + i, 2 * N + 1) = -1.0;
    r(i) = values[i];
    r(M + i) = -values[i];
  }
  for (Eigen::Index k = 0; k < N; ++k) {
    G(2 * M + k, k) = -1.0;
    G(2 * M + k, N + k) = 1.0;
    G(2 * M + N + k, k) = 1.0;
    G(2 * M + N + k, N + k) = 1.0;
  }
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(nv);
  for (Eigen::Index k = 1; k <= N; ++k) cost(N + k - 1) = delta * 2.0 * k;
  cost(2 * N) = 1.0;
  cost(2 * N + 1) = -1.0;
  // Distinct tiny offsets keep the simplex off degenerate vertices; the
  // certified offset is measured afterwards, so the fit need not be exact.
  for (Eigen::Index j = 0; j < nv; ++j) cost(j) += 1e-9 * static_cast<double>(j + 1) / nv;

  // Dual in standard form: min (-r)^T lambda, G^T lambda = cost. Its LP dual
  // multipliers are -y.
  const LpSolution sol = solve_standard_lp(G.transpose(), cost, -r);
  const Eigen::VectorXd y = -sol.dual;

  std::vector<double> coeffs(N + 1, 0.0);
  if (basis == FitBasis::Cosine) {
    for (Eigen::Index k = 1; k <= N; ++k) coeffs[k] = y(k - 1);
    return TrigPoly::from_cosine(coeffs);
  }
  for (Eigen::Index k = 1; k <= N; ++k) coeffs[k] = 2.0 * y(k - 1);
  return TrigPoly::from_sine(coeffs);
}

}  // namespace acm
