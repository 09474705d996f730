#include "acm/generators.hpp"

#include <cmath>
#include <numbers>

namespace acm {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  spare_ = radius * std::sin(2.0 * kPi * u2);
  has_spare_ = true;
  return radius * std::cos(2.0 * kPi * u2);
}

Complex SplitMix64::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

Matrix gaussian_matrix(Eigen::Index d, SplitMix64& rng) {
  Matrix G(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) G(r, c) = rng.complex_normal();
  }
  return G;
}

Matrix haar_unitary(Eigen::Index d, SplitMix64& rng) {
  const Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(d, rng));
  Matrix Q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& R = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double a = std::abs(R(j, j));
    if (a > 0) Q.col(j) *= R(j, j) / a;
  }
  return Q;
}

Matrix random_hermitian(Eigen::Index d, SplitMix64& rng) {
  const Matrix G = gaussian_matrix(d, rng);
  return 0.5 * (G + G.adjoint());
}

Matrix expi_hermitian(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()));
  Eigen::VectorXcd e(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

UnitaryPair cyclic_shift_pair(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidMatrix, "cyclic shift needs n >= 2");
  Matrix U = Matrix::Zero(n, n);
  Matrix V = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    U((j + 1) % n, j) = 1.0;
    V(j, j) = std::polar(1.0, -2.0 * kPi * j / n);
  }
  return UnitaryPair(std::move(U), std::move(V));
}

UnitaryPair powered_pair(int n, int k) {
  if (k == 0) throw Error(ErrorCode::InvalidMatrix, "powered_pair needs k != 0");
  const UnitaryPair base = cyclic_shift_pair(n);
  const UnitaryPair block = k < 0 ? base
                                  : UnitaryPair(base.U().transpose(), base.V().transpose());
  UnitaryPair out = block;
  for (int i = 1; i < std::abs(k); ++i) out = direct_sum(out, block);
  return out;
}

UnitaryPair commuting_random(int d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::InvalidMatrix, "dimension must be positive");
  SplitMix64 rng(seed);
  const Matrix W = haar_unitary(d, rng);
  Eigen::VectorXcd a(d), b(d);
  for (int j = 0; j < d; ++j) a(j) = std::polar(1.0, kPi * (2.0 * rng.uniform() - 1.0));
  for (int j = 0; j < d; ++j) b(j) = std::polar(1.0, kPi * (2.0 * rng.uniform() - 1.0));
  return UnitaryPair(W * a.asDiagonal() * W.adjoint(), W * b.asDiagonal() * W.adjoint());
}

UnitaryPair perturb(const UnitaryPair& pair, double r, std::uint64_t seed) {
  if (!(r >= 0.0 && r < 4.0)) throw Error(ErrorCode::InvalidMatrix, "perturbation radius must lie in [0, 4)");
  if (r == 0.0) return pair;
  SplitMix64 rng(seed);
  const Eigen::Index d = pair.dim();
  Matrix H1 = random_hermitian(d, rng);
  Matrix H2 = random_hermitian(d, rng);
  H1 /= operator_norm(H1);
  H2 /= operator_norm(H2);
  // ||I - e^{isH}|| = 2 sin(s/2) for ||H|| = 1 and s <= pi.
  const double s = 2.0 * std::asin(r / 4.0);
  return UnitaryPair(pair.U() * expi_hermitian(s * H1), pair.V() * expi_hermitian(s * H2),
                     pair.unitary_tol());
}

SelfDualPair selfdual_doubling(const UnitaryPair& pair) {
  return SelfDualPair(UnitaryPair(block_diag(pair.U(), pair.U().transpose()),
                                  block_diag(pair.V(), pair.V().transpose()), pair.unitary_tol()),
                      1e-14);
}

Matrix random_selfdual_hermitian(Eigen::Index N, SplitMix64& rng) {
  const DualStructure s(N);
  return s.symmetrize(random_hermitian(2 * N, rng));
}

Matrix random_symplectic_unitary(Eigen::Index N, SplitMix64& rng) {
  const DualStructure s(N);
  const Matrix H = random_hermitian(2 * N, rng);
  return expi_hermitian(0.5 * (H - s.dual(H)));
}

SelfDualPair perturb_selfdual(const SelfDualPair& sd, double r, std::uint64_t seed) {
  if (!(r >= 0.0)) throw Error(ErrorCode::InvalidMatrix, "perturbation radius must be nonnegative");
  if (r == 0.0) return sd;
  const DualStructure& st = sd.structure();
  SplitMix64 rng(seed);
  Matrix H1 = random_selfdual_hermitian(st.N(), rng);
  Matrix H2 = random_selfdual_hermitian(st.N(), rng);
  H1 /= operator_norm(H1);
  H2 /= operator_norm(H2);
  const Matrix& U = sd.pair().U();
  const Matrix& V = sd.pair().V();

  auto moved = [&](double s, const Matrix& H, const Matrix& X) {
    const Matrix W = expi_hermitian(0.5 * s * H);
    return st.symmetrize(Matrix(W * X * W));
  };
  auto distance = [&](double s) {
    return operator_norm(U - moved(s, H1, U)) + operator_norm(V - moved(s, H2, V));
  };

  double lo = 0.0, hi = 0.5;
  while (distance(hi) < r) {
    hi *= 2.0;
    if (hi > 64.0) throw Error(ErrorCode::InvalidMatrix, "perturbation radius not reachable");
  }
  double s = hi;
  for (int i = 0; i < 80; ++i) {
    s = 0.5 * (lo + hi);
    const double dist = distance(s);
    if (std::abs(dist - r) <= 0.005 * r) break;
    (dist < r ? lo : hi) = s;
  }
  return SelfDualPair(
      UnitaryPair(moved(s, H1, U), moved(s, H2, V), sd.pair().unitary_tol()));
}

SelfDualPair selfdual_commuting_random(int N, std::uint64_t seed) {
  if (N < 1) throw Error(ErrorCode::InvalidMatrix, "N must be positive");
  SplitMix64 rng(seed);
  const DualStructure st(N);
  const Matrix H = random_selfdual_hermitian(N, rng);
  const double a1 = 1.0 + 3.0 * rng.uniform(), a0 = 2.0 * kPi * rng.uniform();
  const double b2 = 1.0 + 2.0 * rng.uniform(), b0 = 2.0 * kPi * rng.uniform();
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const RealVector& lam = es.eigenvalues();
  Eigen::VectorXcd u(lam.size()), v(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    u(i) = std::polar(1.0, a1 * lam(i) + a0);
    v(i) = std::polar(1.0, b2 * lam(i) * lam(i) + b0);
  }
  const Matrix& Q = es.eigenvectors();
  const Matrix U = st.symmetrize(Matrix(Q * u.asDiagonal() * Q.adjoint()));
  const Matrix V = st.symmetrize(Matrix(Q * v.asDiagonal() * Q.adjoint()));
  return SelfDualPair(UnitaryPair(U, V));
}

UnitaryPair generate_pair(const PairSpec& spec) {
  switch (spec.kind) {
    case PairKind::CyclicShift:
      return spec.k == -1 ? cyclic_shift_pair(spec.n) : powered_pair(spec.n, spec.k);
    case PairKind::CommutingRandom:
      return commuting_random(spec.n, spec.seed);
    case PairKind::Perturbed:
      return perturb(cyclic_shift_pair(spec.n), spec.noise, spec.seed);
    case PairKind::DirectSum:
      return direct_sum(cyclic_shift_pair(spec.n), commuting_random(spec.n, spec.seed));
    case PairKind::SelfDualDoubling:
      return perturb_selfdual(selfdual_doubling(cyclic_shift_pair(spec.n)), spec.noise, spec.seed)
          .pair();
  }
  throw Error(ErrorCode::InvalidMatrix, "unknown pair kind");
}

PairKind parse_pair_kind(const std::string& name) {
  if (name == "cyclic_shift") return PairKind::CyclicShift;
  if (name == "commuting_random") return PairKind::CommutingRandom;
  if (name == "perturbed") return PairKind::Perturbed;
  if (name == "direct_sum") return PairKind::DirectSum;
  if (name == "selfdual_doubling") return PairKind::SelfDualDoubling;
  throw Error(ErrorCode::ParseError, "unknown pair kind '" + name + "'");
}

}  // namespace acm
