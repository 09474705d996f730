#include <doctest.h>

#include "acm/logmethod.hpp"
#include "support.hpp"

using namespace acm;
using acm::test::kPi;

TEST_SUITE("logmethod") {

TEST_CASE("principal logarithm examples") {
  CHECK(test::max_abs(principal_log(Matrix::Identity(3, 3)).K) < 1e-14);

  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = Complex(0, 1);
  D(1, 1) = Complex(0, -1);
  const Matrix K = principal_log(D).K;
  CHECK(std::abs(K(0, 0) - kPi / 2) < 1e-12);
  CHECK(std::abs(K(1, 1) + kPi / 2) < 1e-12);

  const PrincipalLog m = principal_log(-Matrix::Identity(2, 2));
  CHECK(test::max_abs(m.K - kPi * Matrix::Identity(2, 2)) < 1e-12);
  CHECK(m.branch_margin < 1e-12);
  CHECK_THROWS_AS(principal_log(2.0 * Matrix::Identity(2, 2)), Error);
}

TEST_CASE("principal logarithm reconstructs V and keeps self-duality") {
  const SelfDualPair sd = selfdual_commuting_random(5, 2);
  const PrincipalLog L = principal_log(sd.pair().V(), sd.structure());
  CHECK(operator_norm(expi_hermitian(L.K) - sd.pair().V()) <= 1e-8);
  CHECK(sd.structure().self_duality_defect(L.K) <= 1e-8);
  const RealVector ev = hermitian_eig(L.K);
  CHECK(ev.minCoeff() >= -kPi);
  CHECK(ev.maxCoeff() <= kPi);
}

TEST_CASE("log Bott matrix examples") {
  const Eigen::Index d = 4;
  const Matrix I = Matrix::Identity(d, d);
  const BottMatrix B = build_BL(UnitaryPair(I, I));
  Matrix expected = Matrix::Zero(2 * d, 2 * d);
  expected.topRightCorner(d, d) = I;
  expected.bottomLeftCorner(d, d) = I;
  CHECK(test::max_abs(B.B - expected) < 1e-12);

  const BottMatrix C = build_BL(UnitaryPair(I, -I));
  CHECK(test::max_abs(C.B - block_diag(I, -I)) < 1e-12);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BottMatrix E = build_BL(commuting_random(6, seed));
    CHECK(operator_norm(E.B * E.B - Matrix::Identity(12, 12)) <= 1e-9);
  }
}

TEST_CASE("log Bott matrix structure") {
  const UnitaryPair p = cyclic_shift_pair(20);
  const BottMatrix B = build_BL(p);
  const Matrix K = principal_log(p.V()).K;
  CHECK(hermiticity_defect(B.B) <= 1e-12);
  CHECK(test::max_abs(B.B.topLeftCorner(20, 20) - K / kPi) < 1e-12);
  CHECK(test::max_abs(B.B.bottomRightCorner(20, 20) + K / kPi) < 1e-12);

  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(70));
  const BottMatrix S = build_BL(sd.pair(), sd.structure());
  CHECK(test::max_abs(sd.structure().dual_tensor(S.B) + S.B) <= 1e-9);
}

TEST_CASE("square defect bound for the log method") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const UnitaryPair p = perturb(commuting_random(8, seed), 0.3, seed + 7);
    const SquareDefect s = log_square_defect(p);
    CHECK(s.measured <= s.bound + 1e-10);
  }
}

TEST_CASE("log kappa_2 agrees with the trig method") {
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(64));
  const LogKappa2Result r = kappa2_log(sd);
  CHECK(r.log_certified);
  CHECK(r.kappa.kappa2 == pfaffian_bott_index(sd).kappa2);
  CHECK(r.kappa.kappa2 == -1);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(kappa2_log(selfdual_commuting_random(4, seed)).kappa.kappa2 == 1);
  }
  const Matrix I = Matrix::Identity(4, 4);
  CHECK(kappa2_log(SelfDualPair(UnitaryPair(I, -I))).kappa.kappa2 == 1);
}

TEST_CASE("log kappa_2 is unchanged by structure-preserving conjugation") {
  SplitMix64 rng(50);
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(64));
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix W = random_symplectic_unitary(64, rng);
    const SelfDualPair c(UnitaryPair(W * sd.pair().U() * W.adjoint(), W * sd.pair().V() * W.adjoint()),
                         1e-8);
    CHECK(kappa2_log(c).kappa.kappa2 == -1);
  }
}

TEST_CASE("log method threshold gate") {
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(31));
  CHECK_THROWS_AS(kappa2_log(sd), Error);
  const LogKappa2Result r = kappa2_log(sd, true);
  CHECK_FALSE(r.log_certified);
}

}  // TEST_SUITE
