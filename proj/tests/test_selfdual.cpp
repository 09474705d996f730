#include <doctest.h>

#include "acm/selfdual.hpp"
#include "support.hpp"

using namespace acm;

namespace {

Matrix symplectic_form(Eigen::Index N) {
  Matrix Z = Matrix::Zero(2 * N, 2 * N);
  Z.topRightCorner(N, N).setIdentity();
  Z.bottomLeftCorner(N, N) = -Matrix::Identity(N, N);
  return Z;
}

}  // namespace

TEST_SUITE("selfdual") {

TEST_CASE("structure matrices") {
  const DualStructure s(3);
  const Matrix& Z = s.Z();
  CHECK(test::max_abs(Z * Z + Matrix::Identity(6, 6)) == 0.0);
  CHECK(test::max_abs(Z.transpose() + Z) == 0.0);
  CHECK(unitarity_defect(s.Q()) <= 1e-12);
}

TEST_CASE("dual examples") {
  const DualStructure s(2);
  CHECK(test::max_abs(s.dual(Matrix::Identity(4, 4)) - Matrix::Identity(4, 4)) == 0.0);
  CHECK(test::max_abs(s.dual(s.Z()) + s.Z()) == 0.0);

  SplitMix64 rng(40);
  const Matrix X = gaussian_matrix(4, rng);
  Matrix expected(4, 4);
  expected << X.bottomRightCorner(2, 2).transpose(), -X.topRightCorner(2, 2).transpose(),
      -X.bottomLeftCorner(2, 2).transpose(), X.topLeftCorner(2, 2).transpose();
  CHECK(test::max_abs(s.dual(X) - expected) < 1e-15);
  CHECK_THROWS_AS(dual(Matrix::Identity(3, 3)), Error);
}

TEST_CASE("dual is an involutive anti-automorphism") {
  SplitMix64 rng(41);
  const DualStructure s(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix X = gaussian_matrix(6, rng), Y = gaussian_matrix(6, rng);
    CHECK(test::max_abs(s.dual(s.dual(X)) - X) < 1e-14);
    CHECK(test::max_abs(s.dual(X * Y) - s.dual(Y) * s.dual(X)) < 1e-12);
    CHECK(test::max_abs(s.dual(X.adjoint()) - s.dual(X).adjoint()) < 1e-14);
  }
}

TEST_CASE("tensor dual") {
  SplitMix64 rng(42);
  const DualStructure s(2);
  CHECK(test::max_abs(s.dual_tensor(Matrix::Identity(8, 8)) - Matrix::Identity(8, 8)) == 0.0);
  const Matrix A = gaussian_matrix(4, rng), D = gaussian_matrix(4, rng);
  const Matrix X = block_diag(A, D);
  CHECK(test::max_abs(s.dual_tensor(X) - block_diag(s.dual(D), s.dual(A))) < 1e-15);

  const Matrix M = gaussian_matrix(8, rng);
  const Matrix& Q = s.Q();
  const Matrix lhs = Q.adjoint() * s.dual_tensor(M) * Q;
  const Matrix rhs = (Q.adjoint() * M * Q).transpose();
  CHECK(test::max_abs(lhs - rhs) <= 1e-9);
  CHECK_THROWS_AS(dual_tensor(Matrix::Identity(6, 6)), Error);
}

TEST_CASE("modified Pfaffian of the identity Bott matrix is one") {
  for (Eigen::Index N = 1; N <= 4; ++N) {
    const UnitaryPair p(Matrix::Identity(2 * N, 2 * N), Matrix::Identity(2 * N, 2 * N));
    const Matrix B = build_B(p).B;
    CHECK(std::abs(modified_pfaffian(B).value() - 1.0) < 1e-12);
  }
}

TEST_CASE("modified Pfaffian of the symplectic block is (-1)^N") {
  for (Eigen::Index N = 1; N <= 4; ++N) {
    const Matrix X = symplectic_form(2 * N);
    const double expected = N % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(modified_pfaffian(X).value() - expected) < 1e-12);
  }
}

TEST_CASE("modified Pfaffian squares to the determinant") {
  SplitMix64 rng(43);
  for (Eigen::Index N = 1; N <= 3; ++N) {
    const DualStructure s(N);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix M = gaussian_matrix(4 * N, rng);
      const Matrix X = 0.5 * (M - s.dual_tensor(M));
      const Complex pf = modified_pfaffian(X, s).value();
      const Complex det = X.determinant();
      CHECK(std::abs(pf * pf - det) <= 1e-8 * std::abs(det));
      const Complex neg = modified_pfaffian(-X, s).value();
      CHECK(std::abs(neg - pf) <= 1e-10 * std::abs(pf));
    }
  }
}

TEST_CASE("hermitian anti-self-dual matrices have real Pfaffians") {
  SplitMix64 rng(44);
  const DualStructure s(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix M = random_hermitian(8, rng);
    const Matrix B = 0.5 * (M - s.dual_tensor(M));
    const Complex pf = modified_pfaffian(B, s).value();
    CHECK(std::abs(pf.imag()) <= 1e-10 * std::abs(pf));
    CHECK(std::abs(pf) > 0);
    CHECK(B.determinant().real() > 0);
  }
  CHECK_THROWS_AS(modified_pfaffian(Matrix::Identity(8, 8), s), Error);
}

TEST_CASE("self-dual pairs") {
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(7));
  CHECK(sd.symmetry_violation() <= 1e-14);
  CHECK(sd.structure().N() == 7);
  const UnitaryPair raw = cyclic_shift_pair(8);
  CHECK_THROWS_AS(SelfDualPair{raw}, Error);
  CHECK(pair_self_duality_defect(raw.U(), raw.V()) > 0.1);
}

TEST_CASE("kappa_2 of commuting and identity pairs") {
  for (Eigen::Index N : {1, 2, 5}) {
    const UnitaryPair p(Matrix::Identity(2 * N, 2 * N), Matrix::Identity(2 * N, 2 * N));
    CHECK(pfaffian_bott_index(SelfDualPair(p)).kappa2 == 1);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Kappa2Result r = pfaffian_bott_index(selfdual_commuting_random(4, seed));
    CHECK(r.kappa2 == 1);
    CHECK_FALSE(r.ill_conditioned);
  }
}

TEST_CASE("kappa_2 of the doubled cyclic pair is the parity of omega") {
  for (int n : {31, 40, 64}) {
    const Kappa2Result r = pfaffian_bott_index(selfdual_doubling(cyclic_shift_pair(n)));
    CHECK(r.kappa2 == -1);
    CHECK(r.certified);
    CHECK_FALSE(r.ill_conditioned);
  }
  const SelfDualPair even = selfdual_doubling(powered_pair(40, 2));
  CHECK(pfaffian_bott_index(even).kappa2 == 1);
}

TEST_CASE("kappa_2 threshold gate") {
  const SelfDualPair wide = selfdual_doubling(cyclic_shift_pair(10));
  CHECK_THROWS_AS(pfaffian_bott_index(wide), Error);
  const Kappa2Result r = pfaffian_bott_index(wide, {.allow_uncertified = true});
  CHECK_FALSE(r.certified);
}

TEST_CASE("kappa_2 is stable under small self-dual perturbations") {
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(48));
  const double radius = selfdual_distance_bound(sd.delta(), sd.delta());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SelfDualPair moved = perturb_selfdual(sd, 0.5 * radius, seed);
    CHECK(moved.symmetry_violation() <= 1e-9);
    CHECK(pfaffian_bott_index(moved, {.allow_uncertified = true}).kappa2 == -1);
  }
}

TEST_CASE("kappa_2 is constant along a self-dual path") {
  SplitMix64 rng(45);
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(60));
  const Matrix H = random_selfdual_hermitian(60, rng);
  const Matrix Hn = H / operator_norm(H);
  for (double t = 0; t <= 0.3; t += 0.05) {
    const Matrix W = expi_hermitian(0.5 * t * Hn);
    const Matrix U = sd.structure().symmetrize(W * sd.pair().U() * W);
    const SelfDualPair moved(UnitaryPair(unitary_part(U), sd.pair().V()), 1e-8);
    if (moved.delta() > kCertifiedDelta) break;
    CHECK(pfaffian_bott_index(moved).kappa2 == -1);
  }
}

TEST_CASE("distance bounds") {
  CHECK(selfdual_distance_bound(0, 0) == doctest::Approx(0.4));
  CHECK(selfdual_distance_bound(0.2, 0) == doctest::Approx(0.2 * std::sqrt(0.8) + 0.2));
  CHECK(selfdual_commuting_distance_bound(0.1) == doctest::Approx(0.2 + 0.2 * std::sqrt(0.95)));
  CHECK_THROWS_AS(selfdual_distance_bound(0.3, 0), Error);
  const SelfDualPair a = selfdual_doubling(cyclic_shift_pair(40));
  const SelfDualPair b = selfdual_commuting_random(40, 3);
  CHECK(selfdual_distance_bounds(a, b) == doctest::Approx(selfdual_distance_bound(a.delta(), b.delta())));
  CHECK_THROWS_AS(selfdual_distance_bounds(b, selfdual_commuting_random(40, 4)), Error);
}

TEST_CASE("Kramers doubling") {
  CHECK(check_kramers(Matrix::Identity(6, 6)));
  SplitMix64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(check_kramers(random_selfdual_hermitian(5, rng)));
  }
  const Matrix H = random_hermitian(6, rng);
  CHECK_THROWS_AS(check_kramers(H), Error);
}

}  // TEST_SUITE
