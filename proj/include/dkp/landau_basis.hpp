#pragma once

#include <vector>

#include <json.hpp>

#include "dkp/gauss_poly.hpp"

namespace dkp {

/// Normalized regular eigenfunction of the radial operator Delta:
/// apply_delta(m, radial) == -lambda_sq * radial.
struct LandauMode {
  int n = 0;
  int m = 0;
  double B = 1.0;
  GaussPoly radial{1.0};
  double lambda_sq = 0.0;
};

/// 4B (n + 1/2 + (|m| + m)/2). Throws InvalidArgument for n < 0 or B <= 0.
double lambda_sq(int n, int m, double B);

/// Coefficients of the terminating series 1F1(-n; hypergeometric_c; x), power i of x.
std::vector<double> hypergeometric_polynomial(int n, int hypergeometric_c);

/// N x^{|m|/2} e^{-x/2} 1F1(-n; |m|+1; x), unit norm, lowest coefficient real positive.
LandauMode build_mode(int n, int m, double B);

nlohmann::json to_json(const LandauMode& mode);

}  // namespace dkp
