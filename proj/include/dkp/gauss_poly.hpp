#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <json.hpp>

namespace dkp {

using Complex = std::complex<double>;

/// f(r) = sum_j c_j x^{j/2} e^{-x/2} with x = B r^2, B > 0.
///
/// Coefficients are indexed by the power j of sqrt(x); only j >= 0 is
/// representable, i.e. every member is regular at the origin. Trailing zero
/// coefficients are never stored.
class GaussPoly {
 public:
  explicit GaussPoly(double B);
  GaussPoly(double B, std::vector<Complex> coeffs);

  static GaussPoly monomial(double B, int j, Complex c = 1.0);

  double B() const noexcept { return B_; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  Complex coeff(int j) const;
  /// Highest stored power, -1 for the zero function.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient, -1 for the zero function.
  int lowest_power() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const noexcept;

  Complex evaluate(double r) const;

  GaussPoly& operator+=(const GaussPoly& rhs);
  GaussPoly& operator-=(const GaussPoly& rhs);
  GaussPoly& operator*=(Complex s);

  friend GaussPoly operator+(GaussPoly lhs, const GaussPoly& rhs) { return lhs += rhs; }
  friend GaussPoly operator-(GaussPoly lhs, const GaussPoly& rhs) { return lhs -= rhs; }
  friend GaussPoly operator*(Complex s, GaussPoly f) { return f *= s; }
  friend GaussPoly operator*(GaussPoly f, Complex s) { return f *= s; }
  friend GaussPoly operator/(GaussPoly f, Complex s) { return f *= (1.0 / s); }
  GaussPoly operator-() const { return Complex(-1.0) * *this; }

 private:
  void trim();
  void check_same_B(const GaussPoly& other) const;

  double B_;
  std::vector<Complex> coeffs_;
};

/// a_m = (1/sqrt2)(d/dr + (m + B r^2)/r). Maps x^{j/2} to sqrt(B/2)(j+m) x^{(j-1)/2}.
/// Throws DomainError if a negative half-power would receive a coefficient
/// larger than 1e-12 of the operand's coefficient norm; smaller ones are
/// treated as rounding noise and dropped.
GaussPoly apply_a(int m, const GaussPoly& f);

/// b_m = (1/sqrt2)(-d/dr + (m + B r^2)/r).
/// Maps x^{j/2} to sqrt(B/2)[(m-j) x^{(j-1)/2} + 2 x^{(j+1)/2}].
GaussPoly apply_b(int m, const GaussPoly& f);

/// Radial Laplacian with vector potential, -b_{m-1} a_m - a_{m+1} b_m.
GaussPoly apply_delta(int m, const GaussPoly& f);

/// Preimage of z under a_m by coefficient matching; the kernel direction
/// x^{-m/2} (present for m <= 0) is left at zero.
/// Throws ReconstructionError when z is not in the range of a_m.
/// Mismatches are measured against max(|z|, reference_norm); a z that is
/// noise relative to reference_norm maps to zero.
GaussPoly solve_a(int m, const GaussPoly& z, double reference_norm = 0.0);

/// Unique preimage of z under b_m (b_m is injective on the class), found by
/// top-down coefficient matching. Throws ReconstructionError when z has no
/// regular preimage. reference_norm as for solve_a.
GaussPoly solve_b(int m, const GaussPoly& z, double reference_norm = 0.0);

/// Gamma(twice_arg / 2) for positive integer twice_arg, by the half-step recurrence.
double half_integer_gamma(int twice_arg);

/// <f|g> = int_0^inf conj(f) g r dr.
Complex inner_product(const GaussPoly& f, const GaussPoly& g);

/// int_0^inf |f|^2 r dr.
double norm_squared(const GaussPoly& f);

/// Largest coefficient modulus of f - g.
double max_coeff_diff(const GaussPoly& f, const GaussPoly& g);

nlohmann::json to_json(const GaussPoly& f);
GaussPoly gauss_poly_from_json(const nlohmann::json& j);

}  // namespace dkp
