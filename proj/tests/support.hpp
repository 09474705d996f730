#pragma once

// Oracles and small helpers shared by the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <numbers>

#include "acm/generators.hpp"
#include "acm/linalg.hpp"

namespace acm::test {

inline constexpr double kPi = std::numbers::pi;

/// Pf by expansion along the first row; exponential cost, dim <= 10.
inline Complex cofactor_pfaffian(const Matrix& A) {
  const Eigen::Index n = A.rows();
  if (n == 0) return 1.0;
  if (n % 2 == 1) return 0.0;
  Complex sum = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    if (A(0, j) == Complex(0.0)) continue;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 1; k < n; ++k) {
      if (k != j) keep.push_back(k);
    }
    Matrix minor(n - 2, n - 2);
    for (std::size_t r = 0; r < keep.size(); ++r) {
      for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = A(keep[r], keep[c]);
    }
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    sum += sign * A(0, j) * cofactor_pfaffian(minor);
  }
  return sum;
}

/// a12 a34 - a13 a24 + a14 a23.
inline Complex pfaffian4(const Matrix& A) {
  return A(0, 1) * A(2, 3) - A(0, 2) * A(1, 3) + A(0, 3) * A(1, 2);
}

inline Matrix random_skew(Eigen::Index d, SplitMix64& rng) {
  const Matrix G = gaussian_matrix(d, rng);
  return G - G.transpose();
}

inline double max_abs(const Matrix& X) { return X.cwiseAbs().maxCoeff(); }

/// Relative distance |a - b| / max(1, |b|).
inline double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace acm::test
