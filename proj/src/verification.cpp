#include "dkp/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "dkp/dkp_algebra.hpp"
#include "dkp/errors.hpp"
#include "dkp/landau_basis.hpp"
#include "dkp/oracle.hpp"
#include "dkp/spectrum.hpp"
#include "dkp/wavefunction.hpp"

namespace dkp {
namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const auto stop = std::chrono::steady_clock::now();
  return {name, o.passed, o.detail, std::chrono::duration<double>(stop - start).count()};
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

Outcome matrix_algebra() {
  const auto j12 = build_J12();
  const auto expected = Complex(0.0, -1.0) * build_S3();
  if (j12.max_abs_diff(expected) > 1e-14) return {false, "J12 != -i S3"};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (!verify_trilinear(a, b, c))
          return {false, "trilinear relation fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")"};
  const auto beta0 = build_beta(0);
  if ((beta0 * beta0 * beta0).max_abs_diff(beta0) > 1e-14) return {false, "(beta0)^3 != beta0"};
  return {true, "J12 = -iS3, 64/64 trilinear triples"};
}

Outcome operator_identities() {
  double worst = 0.0;
  for (int m = -4; m <= 4; ++m) {
    for (unsigned trial = 0; trial < 100; ++trial) {
      const double B = 0.5 + 0.25 * (trial % 7);
      const auto f = random_gauss_poly(1000u * static_cast<unsigned>(m + 4) + trial, B, 2, 8);
      const auto lhs = -apply_b(m - 1, apply_a(m, f)) + apply_a(m + 1, apply_b(m, f));
      const auto delta = -apply_b(m - 1, apply_a(m, f)) - apply_a(m + 1, apply_b(m, f));
      worst = std::max(worst, max_coeff_diff(lhs, (2.0 * B) * f) / (2.0 * B * f.coeff_norm()));
      worst = std::max(worst, max_coeff_diff(delta, apply_delta(m, f)) / f.coeff_norm());
    }
  }
  return {worst <= 1e-12, "max relative defect " + sci(worst) + " over 900 inputs"};
}

Outcome landau_modes() {
  double worst = 0.0;
  for (double B : {0.5, 1.0, 2.0})
    for (int m = -4; m <= 4; ++m)
      for (int n = 0; n <= 6; ++n) {
        const auto mode = build_mode(n, m, B);
        const auto lhs = apply_delta(m, mode.radial);
        worst = std::max(worst, max_coeff_diff(lhs, -mode.lambda_sq * mode.radial) /
                                    (mode.lambda_sq * mode.radial.coeff_norm()));
        worst = std::max(worst, std::abs(norm_squared(mode.radial) - 1.0));
      }
  return {worst <= 1e-10, "eigen/normalization defect " + sci(worst)};
}

Outcome spectrum_checks() {
  const double anchors[3] = {energy(Branch::MinusB, 0, 0, 0.0, 1.0, 1.0).epsilon,
                             energy(Branch::Scalar, 0, 0, 0.0, 1.0, 1.0).epsilon,
                             energy(Branch::PlusB, 0, 0, 0.0, 1.0, 1.0).epsilon};
  if (std::abs(anchors[0] - 1.0) > 1e-12 || std::abs(anchors[1] - std::sqrt(3.0)) > 1e-12 ||
      std::abs(anchors[2] - 3.0) > 1e-12)
    return {false, "anchor energies differ from (1, sqrt3, 3)"};
  double worst_closure = 0.0;
  for (double B : {0.5, 1.0, 2.0})
    for (double M : {1.0, 2.0})
      for (int m = -5; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
          const auto lo = energy(Branch::MinusB, n, m, 0.3, B, M);
          const auto mid = energy(Branch::Scalar, n, m, 0.3, B, M);
          const auto hi = energy(Branch::PlusB, n, m, 0.3, B, M);
          if (!(lo.epsilon < mid.epsilon && mid.epsilon < hi.epsilon))
            return {false, "branch ordering violated at n=" + std::to_string(n) + " m=" + std::to_string(m)};
          const double c = M * M + lo.lambda_sq;
          for (const auto* l : {&lo, &hi}) {
            const double u = std::sqrt(l->epsilon * l->epsilon - l->k * l->k);
            const double sign = l->branch == Branch::PlusB ? -1.0 : 1.0;
            worst_closure = std::max(worst_closure, std::abs(u * u + sign * (2.0 * B / M) * u - c) / c);
          }
        }
  return {worst_closure <= 1e-12, "closure defect " + sci(worst_closure)};
}

Outcome eigenvalue_oracle(const VerifyOptions& opt) {
  double worst = 0.0;
  for (double B : {0.5, 1.0, 2.0})
    for (int m = -5; m <= 5; ++m) {
      const auto grid = oracle::RadialGrid::for_field(B, opt.fd_points, opt.x_max);
      const auto ev = oracle::fd_eigenvalues_extrapolated(m, B, grid, 6);
      for (int n = 0; n <= 5; ++n) {
        const double exact = lambda_sq(n, m, B);
        worst = std::max(worst, std::abs(-ev[static_cast<std::size_t>(n)] - exact) / exact);
      }
    }
  return {worst <= 1e-6, "max relative defect " + sci(worst)};
}

Outcome state_residuals(const VerifyOptions& opt) {
  double worst = 0.0, worst_second = 0.0;
  int built = 0, rejected = 0;
  for (double B : {0.5, 1.0})
    for (double M : {1.0, 2.0})
      for (double k : {0.0, 0.7})
        for (int m = -3; m <= 3; ++m)
          for (int n = 0; n <= 4; ++n)
            for (Branch branch : {Branch::Scalar, Branch::MinusB, Branch::PlusB})
              for (Variant variant : {Variant::A, Variant::B}) {
                if (branch == Branch::Scalar && variant == Variant::B) continue;
                TenComponentState s;
                try {
                  s = build_state(branch, n, m, k, B, M, variant);
                } catch (const ReconstructionError&) {
                  // only the MINUS_B lowest level with m <= 0 has no regular state
                  if (branch == Branch::MinusB && n == 0 && m <= 0) {
                    ++rejected;
                    continue;
                  }
                  throw;
                }
                if (opt.inject_perturbation) s.phi2 += 0.01 * build_mode(n + 1, m, B).radial;
                ++built;
                worst = std::max(worst, residual(s));
                worst_second = std::max(worst_second, verify_second_order(s));
              }
  const bool ok = worst <= 1e-10 && worst_second <= 1e-10;
  return {ok, std::to_string(built) + " states, residual " + sci(worst) + ", second-order " + sci(worst_second) +
                  ", " + std::to_string(rejected) + " singular MINUS_B ground levels"};
}

Outcome perturbation_probe() {
  double smallest = INFINITY;
  for (Branch branch : {Branch::Scalar, Branch::PlusB})
    for (int m = -2; m <= 2; ++m) {
      auto s = build_state(branch, 1, m, 0.7, 1.0, 1.0);
      s.phi2 += 0.01 * build_mode(2, m, 1.0).radial;
      smallest = std::min(smallest, residual(s));
    }
  return {smallest > 1e-4, "smallest perturbed residual " + sci(smallest)};
}

}  // namespace

GaussPoly random_gauss_poly(unsigned seed, double B, int lowest, int span) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> coeffs(static_cast<std::size_t>(lowest + span) + 1);
  for (int j = lowest; j <= lowest + span; ++j) {
    const double re = dist(rng);
    const double im = dist(rng);
    coeffs[static_cast<std::size_t>(j)] = {re, im};
  }
  return GaussPoly(B, std::move(coeffs));
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  results.push_back(timed("matrix-algebra", matrix_algebra));
  results.push_back(timed("operator-identities", operator_identities));
  results.push_back(timed("landau-modes", landau_modes));
  results.push_back(timed("spectrum", spectrum_checks));
  if (!options.quick) results.push_back(timed("eigenvalue-oracle", [&] { return eigenvalue_oracle(options); }));
  results.push_back(timed("state-residuals", [&] { return state_residuals(options); }));
  results.push_back(timed("perturbation-probe", perturbation_probe));
  return results;
}

}  // namespace dkp
