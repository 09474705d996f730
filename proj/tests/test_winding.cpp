#include <doctest.h>

#include "acm/winding.hpp"
#include "support.hpp"

using namespace acm;
using acm::test::kPi;

TEST_SUITE("winding") {

TEST_CASE("cyclic pair has winding -1 for every n") {
  for (int n = 3; n <= 64; ++n) {
    const UnitaryPair p = cyclic_shift_pair(n);
    const WindingResult w = winding_number(p);
    CHECK(w.omega == -1);
    CHECK(w.valid);
    CHECK(std::abs(w.raw - w.omega) < 1e-6);
  }
}

TEST_CASE("path oracle agrees") {
  for (int n : {3, 8, 31, 64}) {
    CHECK(winding_via_path(cyclic_shift_pair(n)) == -1);
  }
  CHECK(winding_via_path(commuting_random(6, 3)) == 0);
  const UnitaryPair two = direct_sum(cyclic_shift_pair(8), cyclic_shift_pair(8));
  CHECK(winding_via_path(two) == -2);
  CHECK(winding_number(two).omega == -2);
  CHECK(winding_via_path(cyclic_shift_pair(8), 10) == -1);
}

TEST_CASE("commuting pairs have winding zero") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(winding_number(commuting_random(1 + static_cast<int>(seed * 6), seed)).omega == 0);
  }
}

TEST_CASE("swap, additivity and conjugation") {
  const UnitaryPair p = cyclic_shift_pair(12);
  CHECK(winding_number(p.swapped()).omega == 1);
  const UnitaryPair sum = direct_sum(p, powered_pair(10, 2));
  CHECK(winding_number(sum).omega == 1);
  SplitMix64 rng(9);
  const Matrix W = haar_unitary(12, rng);
  const UnitaryPair c(W * p.U() * W.adjoint(), W * p.V() * W.adjoint());
  CHECK(winding_number(c).omega == -1);
}

TEST_CASE("powered pairs") {
  CHECK(winding_number(powered_pair(31, 2)).omega == 2);
  CHECK(winding_number(powered_pair(31, -3)).omega == -3);
  CHECK(powered_pair(31, -3).delta() == doctest::Approx(2 * std::sin(kPi / 31)));
}

TEST_CASE("undefined at commutator norm 2") {
  Matrix U = Matrix::Zero(2, 2);
  U(0, 1) = U(1, 0) = 1.0;
  Matrix V = Matrix::Identity(2, 2);
  V(1, 1) = -1.0;
  const UnitaryPair p(U, V);
  CHECK(p.delta() == doctest::Approx(2.0));
  CHECK_THROWS_AS(winding_number(p), Error);
}

TEST_CASE("small perturbations keep the winding") {
  const UnitaryPair p = cyclic_shift_pair(10);
  const double radius = std::sqrt(1 - p.delta() * p.delta() / 4);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(winding_number(perturb(p, 0.95 * radius, seed)).omega == -1);
  }
}

TEST_CASE("distance bounds") {
  CHECK(commuting_distance_bound(0.0) == 2.0);
  CHECK(commuting_distance_bound(2 * std::sin(kPi / 8)) == doctest::Approx(1 + std::cos(kPi / 8)));
  CHECK(commuting_distance_bound(2.0) == 1.0);
  CHECK(index_change_distance_bound(0, 0) == 2.0);
  CHECK(index_change_distance_bound(2 * std::sin(kPi / 8), 0) == doctest::Approx(1 + std::cos(kPi / 8)));
  CHECK(index_change_distance_bound(2, 2) == 0.0);
  CHECK_THROWS_AS(distance_bound_commuting(commuting_random(4, 1)), Error);
  CHECK(distance_bound_commuting(cyclic_shift_pair(8)) == doctest::Approx(1.9238795325));
  CHECK_THROWS_AS(distance_bound_index_change(cyclic_shift_pair(8), cyclic_shift_pair(9)), Error);
  CHECK(distance_bound_index_change(cyclic_shift_pair(8), commuting_random(8, 2)) ==
        doctest::Approx(1 + std::cos(kPi / 8)).epsilon(1e-9));
}

}  // TEST_SUITE
