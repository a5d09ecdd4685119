#pragma once

#include <vector>

#include "dkp/gauss_poly.hpp"

namespace dkp::oracle {

/// Uniform cell-centred radial grid: nodes r_i = (i - 1/2) h, i = 1..N, with
/// h = r_max / (N + 1/2), so r_min = h/2 and the Dirichlet node sits at r_max.
struct RadialGrid {
  double r_max = 0.0;
  int N = 0;

  double spacing() const { return r_max / (N + 0.5); }
  double r_min() const { return 0.5 * spacing(); }
  double node(int i) const { return (i + 0.5) * spacing(); }  // i = 0..N-1

  /// Grid reaching x = B r_max^2 = x_max.
  static RadialGrid for_field(double B, int N, double x_max = 60.0);
};

/// Throws InvalidArgument unless N >= 2, r_max > 0 and B r_max^2 >= 32.
void validate(const RadialGrid& grid, double B);

/// The `count` largest eigenvalues of the discretized
/// d^2/dr^2 + (1/r) d/dr - (m + B r^2)^2 / r^2, in descending order (all negative).
///
/// Second-order flux-form central differences, symmetrized by u = sqrt(r) phi,
/// Dirichlet at r_max; the zero-flux face at r = 0 keeps m = 0 second order.
std::vector<double> fd_eigenvalues(int m, double B, const RadialGrid& grid, int count);

/// fd_eigenvalues on N and 2N, Richardson-extrapolated to remove the h^2 term.
/// Throws AccuracyError when the two grids disagree by more than `max_change`
/// (relative), i.e. the base grid is too coarse.
std::vector<double> fd_eigenvalues_extrapolated(int m, double B, const RadialGrid& grid, int count,
                                                double max_change = 1e-4);

struct GridEigenvector {
  double eigenvalue = 0.0;
  std::vector<double> radii;
  std::vector<double> values;  // phi(r_i), unit norm in sum phi^2 r h
};

/// Ground state (largest eigenvalue) with its eigenvector by inverse iteration.
GridEigenvector fd_ground_state(int m, double B, const RadialGrid& grid);

/// |<phi_fd, f>| / (|phi_fd| |f|) with the discrete r dr weight.
double grid_correlation(const GridEigenvector& fd, const GaussPoly& f);

/// Trapezoidal int_0^{r_max} |f|^2 r dr on nodes j h_q, j = 0..N, h_q = r_max / N.
double quad_norm(const GaussPoly& f, const RadialGrid& grid);

}  // namespace dkp::oracle
