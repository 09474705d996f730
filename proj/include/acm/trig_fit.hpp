#pragma once

// Linear programming and the minimax trig-polynomial fits used for
// commutator bound lines.

#include <vector>

#include <Eigen/Dense>

#include "acm/linalg.hpp"

namespace acm {

struct LpSolution {
  Eigen::VectorXd x;     // primal optimum
  Eigen::VectorXd dual;  // y with A^T y <= c, b^T y = c^T x
  double objective = 0.0;
  int iterations = 0;
};

/// min c^T x subject to A x = b, x >= 0, by a two-phase revised simplex
/// that refactorizes the basis each iteration (Dantzig pricing, Bland's rule
/// after stalls). Throws
/// NumericalInconsistency when infeasible, unbounded or out of iterations.
LpSolution solve_standard_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c, int max_iterations = 100000);

enum class FitBasis { Cosine, Sine };

/// Real trig polynomial p of the given degree (cosine or sine terms only)
/// minimizing delta * sum_k |k a_k| + (max - min) of (values - p) over the
/// sample points.
TrigPoly minimax_line_fit(const std::vector<double>& x, const std::vector<double>& values,
                          FitBasis basis, int degree, double delta);

}  // namespace acm
