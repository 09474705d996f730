#include <doctest.h>

#include <sstream>

#include "acm/matrix_io.hpp"
#include "support.hpp"

using namespace acm;
using acm::test::kPi;

TEST_SUITE("linalg") {

TEST_CASE("operator norm of simple matrices") {
  CHECK(operator_norm(Matrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(Matrix::Zero(3, 3)) == 0.0);
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = Complex(0, 3);
  D(1, 1) = -2.0;
  CHECK(operator_norm(D) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("operator norm rejects bad input") {
  CHECK_THROWS_AS(operator_norm(Matrix::Zero(2, 3)), Error);
  Matrix X = Matrix::Identity(2, 2);
  X(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(operator_norm(X), Error);
}

TEST_CASE("power iteration above the SVD cutoff") {
  SplitMix64 rng(5);
  const Eigen::Index d = kSvdNormMaxDim + 8;
  const Matrix G = gaussian_matrix(d, rng);
  const double svd = Eigen::JacobiSVD<Matrix>(G).singularValues()(0);
  CHECK(operator_norm(G) == doctest::Approx(svd).epsilon(1e-10));
}

TEST_CASE("commutator norm of the cyclic pair") {
  for (int n : {8, 31}) {
    const UnitaryPair p = cyclic_shift_pair(n);
    CHECK(commutator_norm(p.U(), p.V()) == doctest::Approx(2 * std::sin(kPi / n)).epsilon(1e-12));
  }
  Matrix A = Matrix::Identity(2, 2), B = Matrix::Identity(2, 2);
  A(1, 1) = Complex(0, 1);
  B(0, 0) = -1.0;
  CHECK(commutator_norm(A, B) == 0.0);
  CHECK_THROWS_AS(commutator_norm(A, Matrix::Identity(3, 3)), Error);
}

TEST_CASE("additive and multiplicative commutators agree on unitaries") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix U = haar_unitary(6, rng), V = haar_unitary(6, rng);
    CHECK(std::abs(commutator_norm(U, V) - multiplicative_commutator_defect(U, V)) <= 1e-9);
  }
}

TEST_CASE("unitary eigendecomposition") {
  auto sorted = [](RealVector v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(unitary_eig(Matrix::Identity(3, 3)).angles.cwiseAbs().maxCoeff() < 1e-14);

  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = Complex(0, 1);
  D(1, 1) = Complex(0, -1);
  const RealVector a = sorted(unitary_eig(D).angles);
  CHECK(a(0) == doctest::Approx(-kPi / 2));
  CHECK(a(1) == doctest::Approx(kPi / 2));

  const RealVector m = unitary_eig(-Matrix::Identity(2, 2)).angles;
  CHECK(m(0) == kPi);
  CHECK(m(1) == kPi);

  SplitMix64 rng(3);
  const Matrix V = haar_unitary(12, rng);
  const UnitaryEigen e = unitary_eig(V);
  const Matrix back = e.Q * e.angles.unaryExpr([](double t) { return std::polar(1.0, t); }).asDiagonal() *
                      e.Q.adjoint();
  CHECK(operator_norm(back - V) <= 1e-9);
  CHECK(unitarity_defect(e.Q) <= 1e-10);
  CHECK(e.angles.maxCoeff() <= kPi);
  CHECK(e.angles.minCoeff() > -kPi);
  CHECK_THROWS_AS(unitary_eig(2.0 * Matrix::Identity(2, 2)), Error);
}

TEST_CASE("periodic functional calculus") {
  const Matrix one = apply_periodic([](double) { return 1.0; }, Matrix::Identity(3, 3));
  CHECK(test::max_abs(one - Matrix::Identity(3, 3)) < 1e-14);

  Matrix V = Matrix::Identity(2, 2);
  V(0, 0) = Complex(0, 1);
  const Matrix s = apply_periodic([](double x) { return std::sin(x); }, V);
  CHECK(std::abs(s(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(s(1, 1)) < 1e-14);

  const Matrix h = apply_periodic(eval_h, Matrix::Identity(4, 4));
  CHECK(test::max_abs(h - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("identity angle function recovers the logarithm") {
  SplitMix64 rng(8);
  const Matrix H = random_hermitian(10, rng);
  const Matrix V = expi_hermitian(0.3 * H / operator_norm(H));
  const Matrix K = apply_periodic([](double x) { return x; }, V);
  CHECK(operator_norm(expi_hermitian(K) - V) <= 1e-9);
}

TEST_CASE("trig polynomials against the periodic calculus") {
  const Matrix I3 = Matrix::Identity(3, 3);
  CHECK(test::max_abs(apply_trigpoly(TrigPoly({Complex(1.0)}), I3) - I3) < 1e-15);

  SplitMix64 rng(21);
  const Matrix V = haar_unitary(5, rng);
  const TrigPoly z({0.0, 0.0, 1.0});
  CHECK(test::max_abs(apply_trigpoly(z, V) - V) < 1e-12);

  Matrix quarter(1, 1);
  quarter(0, 0) = Complex(0, 1);
  CHECK(std::abs(apply_trigpoly(f_trigpoly(), quarter)(0, 0) - 1.0) < 1e-14);

  for (int deg : {1, 4, 10}) {
    std::vector<double> c(deg + 1), s(deg + 1);
    for (int k = 0; k <= deg; ++k) {
      c[k] = rng.normal() / (k + 1);
      s[k] = rng.normal() / (k + 1);
    }
    const TrigPoly pc = TrigPoly::from_cosine(c), ps = TrigPoly::from_sine(s);
    CHECK(pc.is_real_valued());
    CHECK(ps.is_real_valued());
    const Matrix W = haar_unitary(50, rng);
    for (const TrigPoly* p : {&pc, &ps}) {
      const Matrix a = apply_trigpoly(*p, W);
      const Matrix b = apply_periodic([p](double x) { return p->real_value(x); }, W);
      CHECK(operator_norm(a - b) <= 1e-9);
    }
  }
}

TEST_CASE("trig polynomial coefficients and derivative norm") {
  const TrigPoly f = f_trigpoly();
  CHECK(f.degree() == 5);
  CHECK(f.coeff(1).imag() == doctest::Approx(-150.0 / 256));
  CHECK(f.coeff(-1).imag() == doctest::Approx(150.0 / 256));
  CHECK(f.coeff(7) == Complex(0.0));
  CHECK(f.derivative_l1() == 1.875);
  CHECK(f.truncated(1).derivative_l1() == 1.171875);
  CHECK(f.real_value(kPi / 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(TrigPoly({1.0, 2.0}), Error);
}

TEST_CASE("unitary part") {
  SplitMix64 rng(4);
  const Matrix U = haar_unitary(6, rng);
  CHECK(operator_norm(unitary_part(U) - U) <= 1e-9);
  CHECK(test::max_abs(unitary_part(2.0 * Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)) < 1e-12);

  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = Complex(0, 3);
  const Matrix P = unitary_part(D);
  CHECK(std::abs(P(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(P(1, 1) - Complex(0, 1)) < 1e-12);

  CHECK_THROWS_AS(unitary_part(Matrix::Zero(2, 2)), Error);

  for (int trial = 0; trial < 10; ++trial) {
    Matrix A = gaussian_matrix(8, rng);
    A += 0.1 * Matrix::Identity(8, 8);
    CHECK(unitarity_defect(unitary_part(A)) <= 1e-9);
  }
}

TEST_CASE("hermitian eigenvalues") {
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = -1.0;
  RealVector ev = hermitian_eig(D);
  CHECK(ev(0) == -1.0);
  CHECK(ev(1) == 1.0);

  Matrix X = Matrix::Zero(2, 2);
  X(0, 1) = X(1, 0) = 1.0;
  ev = hermitian_eig(X);
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(1) == doctest::Approx(1.0));

  Matrix N = Matrix::Zero(2, 2);
  N(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(N), Error);
}

TEST_CASE("wrap_angle branch") {
  CHECK(wrap_angle(-kPi) == kPi);
  CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(0.5) == 0.5);
  CHECK(wrap_angle(-kPi + 1e-12, 1e-9) == kPi);
}

TEST_CASE("unitary pair validation") {
  CHECK_THROWS_AS(UnitaryPair(Matrix::Identity(2, 2), 2.0 * Matrix::Identity(2, 2)), Error);
  CHECK_THROWS_AS(UnitaryPair(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), Error);
  const UnitaryPair p = cyclic_shift_pair(5);
  const UnitaryPair s = p.swapped();
  CHECK(test::max_abs(s.U() - p.V()) == 0.0);
  CHECK(s.delta() == doctest::Approx(p.delta()));
  const UnitaryPair sum = direct_sum(p, commuting_random(3, 1));
  CHECK(sum.dim() == 8);
  CHECK(sum.delta() == doctest::Approx(p.delta()).epsilon(1e-10));
}

}  // TEST_SUITE

TEST_SUITE("matrix_io") {

TEST_CASE("complex token parsing") {
  CHECK(parse_complex("0.5-0.25i") == Complex(0.5, -0.25));
  CHECK(parse_complex("1e-3+2E+01i") == Complex(1e-3, 20.0));
  CHECK(parse_complex("-1") == Complex(-1.0, 0.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK_THROWS_AS(parse_complex("abc"), Error);
  CHECK_THROWS_AS(parse_complex("1+2"), Error);
}

TEST_CASE("matrix round trip is exact") {
  SplitMix64 rng(2);
  const Matrix X = gaussian_matrix(5, rng);
  std::stringstream ss;
  write_matrix(ss, X);
  const Matrix Y = read_matrix(ss);
  CHECK(test::max_abs(X - Y) == 0.0);
}

TEST_CASE("malformed matrix text") {
  std::stringstream short_row("2\n1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(short_row), Error);
  std::stringstream bad_dim("x\n");
  CHECK_THROWS_AS(read_matrix(bad_dim), Error);
}

}  // TEST_SUITE
