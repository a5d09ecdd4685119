#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <json.hpp>

namespace dkp {

using Complex = std::complex<double>;

/// Dense 10x10 complex matrix in the 1-3-3-3 block layout:
/// row/column 0 is the scalar Phi_0, 1-3 the vector Phi, 4-6 the E block and
/// 7-9 the H block.
class ComplexMatrix10 {
 public:
  static constexpr std::size_t kDim = 10;

  ComplexMatrix10() { data_.fill(Complex{0.0, 0.0}); }

  static ComplexMatrix10 identity();

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * kDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kDim + col];
  }

  ComplexMatrix10& operator+=(const ComplexMatrix10& rhs);
  ComplexMatrix10& operator-=(const ComplexMatrix10& rhs);
  ComplexMatrix10& operator*=(Complex scalar);

  friend ComplexMatrix10 operator+(ComplexMatrix10 lhs, const ComplexMatrix10& rhs) { return lhs += rhs; }
  friend ComplexMatrix10 operator-(ComplexMatrix10 lhs, const ComplexMatrix10& rhs) { return lhs -= rhs; }
  friend ComplexMatrix10 operator*(Complex s, ComplexMatrix10 m) { return m *= s; }
  friend ComplexMatrix10 operator*(const ComplexMatrix10& lhs, const ComplexMatrix10& rhs);

  ComplexMatrix10 adjoint() const;

  /// Largest entrywise modulus of the difference.
  double max_abs_diff(const ComplexMatrix10& other) const;

  /// Eigenvalues of a Hermitian matrix, ascending (cyclic Jacobi).
  std::array<double, kDim> hermitian_eigenvalues() const;

 private:
  std::array<Complex, kDim * kDim> data_;
};

/// Debug dump: 10x10 nested array of [re, im] pairs.
nlohmann::json to_json(const ComplexMatrix10& m);

}  // namespace dkp
