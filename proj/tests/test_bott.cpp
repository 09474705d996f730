#include <doctest.h>

#include "acm/bounds.hpp"
#include "acm/logmethod.hpp"
#include "acm/winding.hpp"
#include "support.hpp"

using namespace acm;
using acm::test::kPi;

TEST_SUITE("bott") {

TEST_CASE("standard triple at special points") {
  CHECK(eval_f(0) == 0.0);
  CHECK(eval_g(0) == 0.0);
  CHECK(eval_h(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval_f(kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(eval_g(kPi / 2)) < 1e-14);
  CHECK(std::abs(eval_h(kPi / 2)) < 1e-14);
  CHECK(std::abs(eval_f(kPi)) < 1e-14);
  CHECK(std::abs(eval_h(kPi)) < 1e-14);
  CHECK(eval_g(kPi) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("triple invariants on a fine grid") {
  const int M = 100000;
  double worst_sum = 0, worst_prod = 0, worst_identity = 0;
  for (int j = 0; j <= M; ++j) {
    const double x = -kPi + 2 * kPi * j / M;
    const double f = eval_f(x), g = eval_g(x), h = eval_h(x);
    worst_sum = std::max(worst_sum, std::abs(f * f + g * g + h * h - 1));
    worst_prod = std::max(worst_prod, std::abs(g * h));
    const double c = std::cos(x);
    const double closed = 407.0 / 512.0 * std::pow(c, 6) *
                          (1 + 96.0 / 407.0 * std::cos(2 * x) + 9.0 / 407.0 * std::cos(4 * x));
    worst_identity = std::max(worst_identity, std::abs(f * f + closed - 1));
    if (std::abs(x) < kPi / 2 - 1e-12) CHECK(g == 0.0);
    if (std::abs(x) > kPi / 2 + 1e-12) CHECK(h == 0.0);
  }
  CHECK(worst_sum <= 1e-12);
  CHECK(worst_prod == 0.0);
  CHECK(worst_identity <= 1e-12);
}

TEST_CASE("Fourier coefficients of h") {
  const FourierTable t = fourier_coefficients_h();
  const double expected[] = {0.202047, 0.179940, 0.125655, 0.066010, 0.023445, 0.003886};
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(t.c[n] - expected[n]) <= 1e-6);
    CHECK(t.b(n) == (n % 2 == 0 ? t.c[n] : -t.c[n]));
  }
  CHECK(t.certified);
  CHECK(t.series_tail_bound + t.quadrature_error <= 1e-6);
  CHECK_FALSE(fourier_coefficients_h(5, 3).certified);
  CHECK_THROWS_AS(fourier_coefficients_h(17), Error);
}

TEST_CASE("degree-5 approximant of h stays within its sup bound") {
  const StandardTriple& t = standard_triple();
  double sup = 0;
  const int M = 1 << 18;
  for (int j = 0; j < M; ++j) {
    const double x = -kPi + 2 * kPi * j / M;
    sup = std::max(sup, std::abs(eval_h(x) - t.h5.real_value(x)));
  }
  // The largest deviation is 0.0023880..., just above 0.002338.
  CHECK(sup <= 0.0023881);
  CHECK(sup > 0.002338);
}

TEST_CASE("Bott matrix of the identity pair") {
  const Eigen::Index d = 3;
  const UnitaryPair p(Matrix::Identity(d, d), Matrix::Identity(d, d));
  const BottMatrix B = build_B(p);
  Matrix expected = Matrix::Zero(2 * d, 2 * d);
  expected.topRightCorner(d, d).setIdentity();
  expected.bottomLeftCorner(d, d).setIdentity();
  CHECK(test::max_abs(B.B - expected) < 1e-12);
  CHECK(B.gap == doctest::Approx(1.0));
  CHECK(signature(B.B) == 0);
  for (Eigen::Index i = 0; i < 2 * d; ++i) CHECK(std::abs(std::abs(B.eigenvalues(i)) - 1) < 1e-12);
}

TEST_CASE("commuting pairs square to the identity") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const UnitaryPair p = commuting_random(7, seed);
    const BottMatrix B = build_B(p);
    CHECK(operator_norm(B.B * B.B - Matrix::Identity(14, 14)) <= 1e-9);
    CHECK(hermiticity_defect(B.B) <= 1e-9);
    CHECK(B.gap == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(bott_index(p).kappa == 0);
  }
}

TEST_CASE("signature") {
  Matrix D = Matrix::Zero(3, 3);
  D(0, 0) = 2;
  D(1, 1) = 3;
  D(2, 2) = -1;
  CHECK(signature(D) == 1);
  CHECK(signature(D.topLeftCorner(2, 2) - 2.5 * Matrix::Identity(2, 2)) == 0);
  D(2, 2) = 1e-12;
  CHECK_THROWS_AS(signature(D), Error);
}

TEST_CASE("Bott index of cyclic pairs") {
  const UnitaryPair p = cyclic_shift_pair(31);
  const BottIndexResult r = bott_index(p);
  CHECK(r.kappa == -1);
  CHECK(r.certified);
  CHECK(r.gap >= guaranteed_gap(p.delta()).gap);
  CHECK(bott_index(direct_sum(p, p)).kappa == -2);
  CHECK(bott_index(p, {.use_trigpoly = true}).kappa == -1);

  const UnitaryPair wide = cyclic_shift_pair(10);
  CHECK_THROWS_AS(bott_index(wide), Error);
  const BottIndexResult loose = bott_index(wide, {.allow_uncertified = true});
  CHECK_FALSE(loose.certified);
  CHECK(loose.kappa == -1);
}

TEST_CASE("Bott index is conjugation invariant and matches winding") {
  SplitMix64 rng(17);
  for (int n : {31, 40, 64}) {
    const UnitaryPair p = cyclic_shift_pair(n);
    const Matrix W = haar_unitary(n, rng);
    const UnitaryPair c(W * p.U() * W.adjoint(), W * p.V() * W.adjoint());
    CHECK(bott_index(c).kappa == winding_number(c).omega);
  }
}

TEST_CASE("self-dual input gives an anti-self-dual Bott matrix") {
  const SelfDualPair sd = selfdual_doubling(cyclic_shift_pair(33));
  const BottMatrix B = build_B(sd.pair());
  CHECK(test::max_abs(sd.structure().dual_tensor(B.B) + B.B) <= 1e-9);
}

TEST_CASE("square defect bound on random pairs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const UnitaryPair p = perturb(commuting_random(8, seed), 0.4, seed + 100);
    const SquareDefect s = trig_square_defect(p);
    CHECK(s.measured <= s.bound + 1e-10);
  }
}

}  // TEST_SUITE
