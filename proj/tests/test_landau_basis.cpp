#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "dkp/errors.hpp"
#include "dkp/landau_basis.hpp"

using dkp::Complex;

namespace {

// Direct series sum_i (-n)_i / ((c)_i i!) x^i with Pochhammer products recomputed per term.
double series_1f1(int n, int c, double x) {
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    double poch_a = 1.0, poch_c = 1.0, fact = 1.0;
    for (int s = 0; s < i; ++s) {
      poch_a *= (-n + s);
      poch_c *= (c + s);
      fact *= (s + 1);
    }
    sum += poch_a / (poch_c * fact) * std::pow(x, i);
  }
  return sum;
}

// Laguerre form: 1F1(-n; a+1; x) = n! a! / (n+a)! L_n^a(x), L from the three-term recurrence.
double laguerre_1f1(int n, int a, double x) {
  double prev = 1.0, cur = 1.0 + a - x;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur * std::exp(std::lgamma(n + 1.0) + std::lgamma(a + 1.0) - std::lgamma(n + a + 1.0));
}

}  // namespace

TEST_CASE("lambda^2 examples") {
  CHECK(dkp::lambda_sq(0, 0, 1.0) == 2.0);
  CHECK(dkp::lambda_sq(2, -3, 1.0) == 10.0);
  CHECK(dkp::lambda_sq(1, 2, 0.5) == 7.0);
}

TEST_CASE("lambda^2 rejects n < 0 and B <= 0") {
  CHECK_THROWS_AS(dkp::lambda_sq(-1, 0, 1.0), dkp::InvalidArgument);
  CHECK_THROWS_AS(dkp::lambda_sq(0, 0, 0.0), dkp::InvalidArgument);
  CHECK_THROWS_AS(dkp::lambda_sq(0, 0, -2.0), dkp::InvalidArgument);
  CHECK_THROWS_AS(dkp::build_mode(-1, 0, 1.0), dkp::InvalidArgument);
  CHECK_THROWS_AS(dkp::build_mode(0, 0, 0.0), dkp::InvalidArgument);
}

TEST_CASE("hypergeometric polynomial against two independent forms") {
  const auto c = dkp::hypergeometric_polynomial(1, 3);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 1.0);
  CHECK(c[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  for (int n = 0; n <= 12; ++n) {
    for (int a = 0; a <= 6; ++a) {
      const auto coeffs = dkp::hypergeometric_polynomial(n, a + 1);
      for (double x : {0.0, 0.7, 2.5, 9.0}) {
        double val = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) val = val * x + coeffs[i];
        const double s = series_1f1(n, a + 1, x);
        const double l = laguerre_1f1(n, a, x);
        double scale = 1.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) scale += std::abs(coeffs[i]) * std::pow(x, i);
        CHECK(std::abs(val - s) <= 1e-12 * scale);
        CHECK(std::abs(val - l) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("ground mode is the normalized Gaussian") {
  const auto mode = dkp::build_mode(0, 0, 1.0);
  CHECK(mode.lambda_sq == 2.0);
  CHECK(mode.radial.degree() == 0);
  CHECK(std::abs(mode.radial.coeff(0) - std::sqrt(2.0)) <= 1e-15);
  CHECK(dkp::norm_squared(mode.radial) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("(n, m) = (1, 2): x (1 - x/3) e^{-x/2} up to normalization") {
  const auto mode = dkp::build_mode(1, 2, 1.0);
  CHECK(mode.radial.lowest_power() == 2);
  CHECK(mode.radial.degree() == 4);
  const Complex ratio = mode.radial.coeff(4) / mode.radial.coeff(2);
  CHECK(std::abs(ratio - (-1.0 / 3.0)) <= 1e-15);
}

TEST_CASE("(n, m, B) = (3, -1, 1) has Delta eigenvalue -14") {
  const auto mode = dkp::build_mode(3, -1, 1.0);
  CHECK(mode.lambda_sq == 14.0);
  const auto d = dkp::apply_delta(-1, mode.radial);
  CHECK(dkp::max_coeff_diff(d, -14.0 * mode.radial) <= 1e-10 * mode.radial.coeff_norm());
}

TEST_CASE("every mode is a Delta eigenfunction with unit norm") {
  for (double B : {0.5, 1.0, 2.0}) {
    for (int n = 0; n <= 6; ++n) {
      for (int m = -6; m <= 6; ++m) {
        const auto mode = dkp::build_mode(n, m, B);
        const auto d = dkp::apply_delta(m, mode.radial);
        CHECK(dkp::max_coeff_diff(d, -mode.lambda_sq * mode.radial) <=
              1e-10 * mode.lambda_sq * mode.radial.coeff_norm());
        CHECK(dkp::norm_squared(mode.radial) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mode.radial.lowest_power() == std::abs(m));
        CHECK(mode.radial.degree() == std::abs(m) + 2 * n);
        CHECK(mode.radial.coeff(std::abs(m)).real() > 0.0);
        CHECK(mode.radial.coeff(std::abs(m)).imag() == 0.0);
      }
    }
  }
}

TEST_CASE("modes at fixed m are orthonormal") {
  for (int m : {-3, 0, 2}) {
    for (int n1 = 0; n1 <= 6; ++n1) {
      for (int n2 = 0; n2 <= 6; ++n2) {
        const auto ip = dkp::inner_product(dkp::build_mode(n1, m, 1.3).radial, dkp::build_mode(n2, m, 1.3).radial);
        CHECK(std::abs(ip - (n1 == n2 ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("lambda^2 is independent of m for m <= 0") {
  for (int n = 0; n <= 5; ++n) {
    for (int m = -8; m <= 0; ++m) CHECK(dkp::lambda_sq(n, m, 0.8) == dkp::lambda_sq(n, 0, 0.8));
    CHECK(dkp::lambda_sq(n, 1, 0.8) > dkp::lambda_sq(n, 0, 0.8));
  }
}

TEST_CASE("mode JSON carries quantum numbers") {
  const auto j = dkp::to_json(dkp::build_mode(2, -1, 0.5));
  CHECK(j.at("n").get<int>() == 2);
  CHECK(j.at("m").get<int>() == -1);
  CHECK(j.at("lambda_sq").get<double>() == dkp::lambda_sq(2, -1, 0.5));
  CHECK(j.at("coeffs").size() == 3);  // half-powers 1, 3, 5
}
