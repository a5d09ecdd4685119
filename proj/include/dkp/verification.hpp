#pragma once

#include <string>
#include <vector>

#include "dkp/gauss_poly.hpp"

namespace dkp {

struct VerifyOptions {
  bool quick = false;                // skip the finite-difference oracle
  bool inject_perturbation = false;  // test hook: corrupt every built state
  int fd_points = 4000;
  double x_max = 60.0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Deterministic random GaussPoly with powers lowest..lowest+span, coefficients
/// uniform in the unit square.
GaussPoly random_gauss_poly(unsigned seed, double B, int lowest, int span);

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace dkp
