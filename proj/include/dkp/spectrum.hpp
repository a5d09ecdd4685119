#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dkp {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// The three linearly independent solution classes. Declaration order is the
/// tie-break order used when sorting levels.
enum class Branch { Scalar, MinusB, PlusB };

/// Choice of diagonalizing transformation for the (g, G) coupling.
enum class Variant { A, B };

std::string_view branch_name(Branch branch);
Branch parse_branch(std::string_view name);

/// Which of the two primed amplitudes (g', G') carries the Landau mode.
enum class PrimedAmplitude { LowerG, UpperG };

/// PLUS_B sits on the +2B sqrt(gamma) eigenvector, MINUS_B on the -2B sqrt(gamma)
/// one; the variant decides whether that is the first or second row of S.
/// Throws InvalidArgument for Branch::Scalar.
PrimedAmplitude nonvanishing_amplitude(Branch branch, Variant variant);

struct Level {
  Branch branch = Branch::Scalar;
  int n = 0;
  int m = 0;
  double k = 0.0;
  double B = 1.0;
  double M = 1.0;
  double lambda_sq = 0.0;
  double epsilon = 0.0;
};

/// [[0, 2iB], [-2iB gamma_ratio, 0]] with gamma_ratio = (eps^2 - k^2)/M^2.
struct CouplingMatrix {
  double B = 1.0;
  double gamma_ratio = 1.0;
  Matrix2 entries{};
};

CouplingMatrix make_coupling_matrix(double B, double gamma_ratio);

struct CouplingDiagonalization {
  Matrix2 S{};
  std::array<double, 2> eigenvalues{};
};

/// Rows of S are left eigenvectors of the coupling matrix:
///   variant A: S = [[-i sqrt(gamma), 1], [+i sqrt(gamma), 1]], eigenvalues (+2B sqrt(gamma), -2B sqrt(gamma))
///   variant B: rows swapped.
/// Throws DegenerateError when gamma_ratio <= 0.
CouplingDiagonalization diagonalize_coupling(double gamma_ratio, Variant variant, double B = 1.0);

Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 inverse(const Matrix2& m);

/// sqrt(eps^2 - k^2) for a branch, given lambda^2.
double transverse_energy(Branch branch, double lambda_sq, double B, double M);

/// Energy level; sign = -1 exposes the negative root.
Level energy(Branch branch, int n, int m, double k, double B, double M, int sign = +1);

/// Every (branch, n, m, k) combination, sorted by epsilon, then branch, n, m, k.
std::vector<Level> enumerate_levels(int n_max, const std::vector<int>& m_values,
                                    const std::vector<double>& k_values, double B, double M);

/// 9 significant digits, "%.9g".
std::string format_sig9(double value);

void write_levels_csv(std::ostream& out, const std::vector<Level>& levels);
nlohmann::json to_json(const Level& level);
nlohmann::json levels_to_json(const std::vector<Level>& levels);

}  // namespace dkp
