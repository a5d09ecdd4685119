#include "dkp/landau_basis.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "dkp/errors.hpp"

namespace dkp {
namespace {

void check_quantum_numbers(int n, double B) {
  if (n < 0) throw InvalidArgument("radial quantum number n must be >= 0, got " + std::to_string(n));
  if (!(B > 0.0) || !std::isfinite(B))
    throw InvalidArgument("magnetic parameter B must be positive, got " + std::to_string(B));
}

}  // namespace

double lambda_sq(int n, int m, double B) {
  check_quantum_numbers(n, B);
  return 4.0 * B * (n + 0.5 + 0.5 * (std::abs(m) + m));
}

std::vector<double> hypergeometric_polynomial(int n, int hypergeometric_c) {
  if (n < 0) throw InvalidArgument("1F1 polynomial degree must be >= 0");
  if (hypergeometric_c < 1) throw InvalidArgument("1F1 lower parameter must be >= 1");
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1.0;
  // c_{i+1} = c_i (i - n) / ((i + c)(i + 1))
  for (int i = 0; i < n; ++i) {
    coeffs[static_cast<std::size_t>(i) + 1] =
        coeffs[static_cast<std::size_t>(i)] * static_cast<double>(i - n) /
        (static_cast<double>(i + hypergeometric_c) * static_cast<double>(i + 1));
  }
  return coeffs;
}

LandauMode build_mode(int n, int m, double B) {
  check_quantum_numbers(n, B);
  const int abs_m = std::abs(m);
  const auto poly = hypergeometric_polynomial(n, abs_m + 1);

  // x^{|m|/2} x^i  ->  half-power |m| + 2i
  std::vector<Complex> coeffs(static_cast<std::size_t>(abs_m + 2 * n) + 1);
  for (int i = 0; i <= n; ++i)
    coeffs[static_cast<std::size_t>(abs_m + 2 * i)] = poly[static_cast<std::size_t>(i)];
  // int x^|m| e^{-x} 1F1^2 dx = n! |m|!^2 / (n+|m|)!, and r dr = dx / (2B). The
  // closed form avoids the cancellation of summing the alternating coefficients.
  const double log_norm_sq = std::lgamma(n + 1.0) + 2.0 * std::lgamma(abs_m + 1.0) -
                             std::lgamma(n + abs_m + 1.0) - std::log(2.0 * B);
  GaussPoly radial(B, std::move(coeffs));
  radial *= std::exp(-0.5 * log_norm_sq);

  return LandauMode{n, m, B, std::move(radial), lambda_sq(n, m, B)};
}

nlohmann::json to_json(const LandauMode& mode) {
  auto j = to_json(mode.radial);
  j["n"] = mode.n;
  j["m"] = mode.m;
  j["lambda_sq"] = mode.lambda_sq;
  return j;
}

}  // namespace dkp
