#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include <json.hpp>

#include "dkp/gauss_poly.hpp"
#include "dkp/spectrum.hpp"

namespace dkp {

/// Radial part of the ten-component DKP function (Phi_0, Phi, E, H) for fixed
/// (epsilon, m, k). Immutable once built; all components share the same B.
struct TenComponentState {
  static constexpr std::size_t kComponents = 10;
  static constexpr std::array<std::string_view, kComponents> kNames = {
      "phi0", "phi1", "phi2", "phi3", "e1", "e2", "e3", "h1", "h2", "h3"};

  Branch branch = Branch::Scalar;
  std::optional<Variant> variant;
  int n = 0;
  int m = 0;
  double k = 0.0;
  double B = 1.0;
  double M = 1.0;
  double epsilon = 0.0;

  GaussPoly phi0{1.0}, phi1{1.0}, phi2{1.0}, phi3{1.0};
  GaussPoly e1{1.0}, e2{1.0}, e3{1.0};
  GaussPoly h1{1.0}, h2{1.0}, h3{1.0};

  std::array<const GaussPoly*, kComponents> components() const {
    return {&phi0, &phi1, &phi2, &phi3, &e1, &e2, &e3, &h1, &h2, &h3};
  }
  std::array<GaussPoly*, kComponents> components() {
    return {&phi0, &phi1, &phi2, &phi3, &e1, &e2, &e3, &h1, &h2, &h3};
  }
};

/// F = k Phi_0 + eps Phi_2, G = eps Phi_0 + k Phi_2,
/// f = b_{m-1} Phi_1 + a_{m+1} Phi_3, g = b_{m-1} Phi_1 - a_{m+1} Phi_3.
struct ScalarQuadruple {
  GaussPoly F{1.0}, G{1.0}, f{1.0}, g{1.0};
};

ScalarQuadruple scalar_quadruple(const TenComponentState& state);

/// Fills E and H from the four-vector block using the algebraic half of the
/// radial system; Phi_0..Phi_3 and the quantum numbers must already be set.
void complete_field_components(TenComponentState& state);

/// Scales to unit total norm and makes the lowest coefficient of the
/// largest component real positive.
void normalize(TenComponentState& state);

/// Class with Phi_1 = Phi_3 = 0 and eps Phi_0 + k Phi_2 = 0:
/// Phi_0 = k phi_{n,m}, Phi_2 = -eps phi_{n,m}, energy eps^2 = M^2 + k^2 + lambda^2.
TenComponentState build_scalar_class(int n, int m, double k, double B, double M);

/// Coupled (g, G) class on the PLUS_B or MINUS_B branch.
///
/// The primed amplitude selected by nonvanishing_amplitude() is set to
/// phi_{n,m}, (g, G) are recovered through S^{-1}, f follows from
/// f = -iG + (2B/M^2) g, and F = 0. Phi_1 and Phi_3 are reconstructed from
/// Z_1 = (f+g)/2 = b_{m-1} Phi_1 and Z_3 = (f-g)/2 = a_{m+1} Phi_3.
///
/// Throws DegenerateError if eps^2 == k^2, and ReconstructionError when no
/// regular Phi_1/Phi_3 exists. The latter happens on MINUS_B for n = 0,
/// m <= 0, where eps^2 - k^2 == M^2.
TenComponentState build_branch_state(Branch branch, Variant variant, int n, int m, double k, double B,
                                     double M);

/// Any of the three classes; `variant` is ignored for Branch::Scalar.
TenComponentState build_state(Branch branch, int n, int m, double k, double B, double M,
                              Variant variant = Variant::A);

/// Largest coefficient norm among the ten first-order residuals, divided by
/// the largest component coefficient norm. +inf if an operator leaves the
/// regular class.
double residual(const TenComponentState& state);

/// Same measure for the four second-order equations in Phi_0..Phi_3.
double verify_second_order(const TenComponentState& state);

nlohmann::json to_json(const TenComponentState& state);

/// CSV: r, then re/im of the ten components, one row per grid point.
void write_sampled_csv(std::ostream& out, const TenComponentState& state, std::span<const double> radii);

}  // namespace dkp
