#include "dkp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dkp/errors.hpp"

namespace dkp::oracle {
namespace {

// Symmetric tridiagonal matrix: diag[0..N-1], off[0..N-2].
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

// -Delta on the grid, symmetrized. Positive definite.
Tridiagonal assemble(int m, double B, const RadialGrid& grid) {
  const int n = grid.N;
  const double h = grid.spacing();
  const double h2 = h * h;
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.resize(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    const double r = grid.node(i);
    const double r_lo = r - 0.5 * h;
    const double r_hi = r + 0.5 * h;
    const double a = (m + B * r * r) / r;
    t.diag[static_cast<std::size_t>(i)] = (r_lo + r_hi) / (r * h2) + a * a;
    if (i + 1 < n) t.off[static_cast<std::size_t>(i)] = -r_hi / (h2 * std::sqrt(r * grid.node(i + 1)));
  }
  return t;
}

// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
int count_below(const Tridiagonal& t, double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (k = 0, 1, ...) by bisection.
double kth_eigenvalue(const Tridiagonal& t, int k, double lo, double hi) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  const std::size_t n = t.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  return {lo, hi};
}

// Solve (T - shift) y = rhs; T - shift must be positive definite.
std::vector<double> solve_shifted(const Tridiagonal& t, double shift, std::vector<double> rhs) {
  const std::size_t n = t.diag.size();
  std::vector<double> c(n, 0.0);
  double pivot = t.diag[0] - shift;
  c[0] = n > 1 ? t.off[0] / pivot : 0.0;
  rhs[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = t.diag[i] - shift - t.off[i - 1] * c[i - 1];
    if (i + 1 < n) c[i] = t.off[i] / pivot;
    rhs[i] = (rhs[i] - t.off[i - 1] * rhs[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
  return rhs;
}

}  // namespace

RadialGrid RadialGrid::for_field(double B, int N, double x_max) {
  if (!(B > 0.0)) throw InvalidArgument("B must be positive");
  return RadialGrid{std::sqrt(x_max / B), N};
}

void validate(const RadialGrid& grid, double B) {
  if (grid.N < 2) throw InvalidArgument("radial grid needs at least 2 points");
  if (!(grid.r_max > 0.0)) throw InvalidArgument("radial grid needs r_max > 0");
  if (!(B > 0.0)) throw InvalidArgument("B must be positive");
  if (B * grid.r_max * grid.r_max < 32.0)
    throw InvalidArgument("radial grid must satisfy B r_max^2 >= 32, got " +
                          std::to_string(B * grid.r_max * grid.r_max));
}

std::vector<double> fd_eigenvalues(int m, double B, const RadialGrid& grid, int count) {
  validate(grid, B);
  if (count < 1 || count > grid.N) throw InvalidArgument("eigenvalue count out of range");
  const auto t = assemble(m, B, grid);
  const auto [lo, hi] = gershgorin(t);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double floor = lo;
  for (int k = 0; k < count; ++k) {
    const double ev = kth_eigenvalue(t, k, floor, hi);
    out.push_back(-ev);
    floor = std::max(lo, ev - 1e-9 * std::abs(ev));
  }
  return out;
}

std::vector<double> fd_eigenvalues_extrapolated(int m, double B, const RadialGrid& grid, int count,
                                                double max_change) {
  const auto coarse = fd_eigenvalues(m, B, grid, count);
  const auto fine = fd_eigenvalues(m, B, RadialGrid{grid.r_max, 2 * grid.N}, count);
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double change = std::abs(fine[i] - coarse[i]) / std::abs(fine[i]);
    if (change > max_change)
      throw AccuracyError("finite-difference eigenvalue " + std::to_string(i) + " changed by " +
                          std::to_string(change) + " between N=" + std::to_string(grid.N) + " and 2N");
    out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  }
  return out;
}

GridEigenvector fd_ground_state(int m, double B, const RadialGrid& grid) {
  validate(grid, B);
  const auto t = assemble(m, B, grid);
  const auto [lo, hi] = gershgorin(t);
  const double ev = kth_eigenvalue(t, 0, lo, hi);
  const double shift = ev - 1e-8 * std::abs(ev);

  const std::size_t n = t.diag.size();
  std::vector<double> u(n, 1.0);
  for (int iter = 0; iter < 4; ++iter) {
    u = solve_shifted(t, shift, std::move(u));
    double norm = 0.0;
    for (double v : u) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : u) v /= norm;
  }

  GridEigenvector out;
  out.eigenvalue = -ev;
  out.radii.resize(n);
  out.values.resize(n);
  const double h = grid.spacing();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.node(static_cast<int>(i));
    out.radii[i] = r;
    out.values[i] = u[i] / std::sqrt(r * h);
  }
  return out;
}

double grid_correlation(const GridEigenvector& fd, const GaussPoly& f) {
  const double h = fd.radii.size() > 1 ? fd.radii[1] - fd.radii[0] : 1.0;
  Complex overlap{};
  double nf = 0.0, ng = 0.0;
  for (std::size_t i = 0; i < fd.radii.size(); ++i) {
    const double w = fd.radii[i] * h;
    const Complex v = f.evaluate(fd.radii[i]);
    overlap += fd.values[i] * v * w;
    nf += fd.values[i] * fd.values[i] * w;
    ng += std::norm(v) * w;
  }
  if (nf == 0.0 || ng == 0.0) return 0.0;
  return std::abs(overlap) / std::sqrt(nf * ng);
}

double quad_norm(const GaussPoly& f, const RadialGrid& grid) {
  if (grid.N < 1 || !(grid.r_max > 0.0)) throw InvalidArgument("invalid quadrature grid");
  const double h = grid.r_max / grid.N;
  double sum = 0.0;
  for (int j = 0; j <= grid.N; ++j) {
    const double r = j * h;
    const double w = (j == 0 || j == grid.N) ? 0.5 : 1.0;
    sum += w * std::norm(f.evaluate(r)) * r;
  }
  return sum * h;
}

}  // namespace dkp::oracle
