#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "acm/bott.hpp"

namespace acm {

namespace {

constexpr double kPi = std::numbers::pi;
const double kEnvelopeScale = std::sqrt(407.0 / 512.0);

bool in_inner_region(double x) { return std::abs(x) <= kPi / 2; }

// Binomial coefficient C(1/2, k).
double half_binomial(int k) {
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= (0.5 - j) / (j + 1);
  return c;
}

}  // namespace

double eval_f(double x) {
  return (150.0 * std::sin(x) + 25.0 * std::sin(3.0 * x) + 3.0 * std::sin(5.0 * x)) / 128.0;
}

double standard_envelope(double x) {
  const double c = std::abs(std::cos(x));
  const double inner =
      1.0 + 96.0 / 407.0 * std::cos(2.0 * x) + 9.0 / 407.0 * std::cos(4.0 * x);
  return kEnvelopeScale * c * c * c * std::sqrt(inner);
}

double eval_g(double x) {
  x = wrap_angle(x);
  return in_inner_region(x) ? 0.0 : standard_envelope(x);
}

double eval_h(double x) {
  x = wrap_angle(x);
  return in_inner_region(x) ? standard_envelope(x) : 0.0;
}

FourierTable fourier_coefficients_h(int max_n, int series_K) {
  if (max_n < 0 || max_n > 16) {
    throw Error(ErrorCode::InvalidPolynomial, "max_n must lie in [0, 16]");
  }
  if (series_K < 0) series_K = 0;

  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double prefactor = kEnvelopeScale / (2.0 * kPi);

  FourierTable table;
  table.series_K = series_K;
  table.c.assign(max_n + 1, 0.0);
  double quad_err = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    double sum = 0.0;
    for (int k = 0; k <= series_K; ++k) {
      auto integrand = [n, k](double x) {
        const double c = std::cos(x);
        const double w = 96.0 / 407.0 * std::cos(2.0 * x) + 9.0 / 407.0 * std::cos(4.0 * x);
        return std::cos(n * x) * c * c * c * std::pow(w, k);
      };
      double err = 0.0;
      const double integral = Quad::integrate(integrand, -kPi / 2, kPi / 2, 15, 1e-12, &err);
      const double weight = prefactor * half_binomial(k);
      sum += weight * integral;
      quad_err += std::abs(weight) * err;
    }
    table.c[n] = sum;
  }

  // |I_{n,k}| <= (1/2pi) sqrt(407/512) |C(1/2,k)| (105/407)^k int cos^3, and
  // int_{-pi/2}^{pi/2} cos^3 = 4/3. The dropped terms sum to
  // T_K(-y) - sqrt(1-y) in absolute value, y = 105/407.
  const double y = 105.0 / 407.0;
  double taylor = 0.0;
  for (int k = 0; k <= series_K; ++k) taylor += half_binomial(k) * std::pow(-y, k);
  table.series_tail_bound = prefactor * (4.0 / 3.0) * std::max(0.0, taylor - std::sqrt(1.0 - y));
  table.quadrature_error = quad_err;
  table.certified = series_K >= 7 && table.series_tail_bound + quad_err <= 1e-6;
  return table;
}

TrigPoly f_trigpoly() {
  return TrigPoly::from_sine({0.0, 150.0 / 128.0, 0.0, 25.0 / 128.0, 0.0, 3.0 / 128.0});
}

const StandardTriple& standard_triple() {
  static const StandardTriple triple = [] {
    StandardTriple t;
    t.table = fourier_coefficients_h(5, 7);
    t.f5 = f_trigpoly();
    std::vector<double> b(6), c(6);
    for (int n = 0; n <= 5; ++n) {
      c[n] = t.table.c[n];
      b[n] = t.table.b(n);
    }
    t.h5 = TrigPoly::from_cosine(c);
    t.g5 = TrigPoly::from_cosine(b);
    return t;
  }();
  return triple;
}

}  // namespace acm
