#include "dkp/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

ComplexMatrix10 ComplexMatrix10::identity() {
  ComplexMatrix10 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix10& ComplexMatrix10::operator+=(const ComplexMatrix10& rhs) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix10& ComplexMatrix10::operator-=(const ComplexMatrix10& rhs) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix10& ComplexMatrix10::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix10 operator*(const ComplexMatrix10& lhs, const ComplexMatrix10& rhs) {
  ComplexMatrix10 out;
  constexpr auto n = ComplexMatrix10::kDim;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix10 ComplexMatrix10::adjoint() const {
  ComplexMatrix10 out;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix10::max_abs_diff(const ComplexMatrix10& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

std::array<double, ComplexMatrix10::kDim> ComplexMatrix10::hermitian_eigenvalues() const {
  // Embed H = X + iY as the real symmetric [[X, -Y], [Y, X]]; every eigenvalue
  // then appears twice, so keep every second one.
  constexpr std::size_t n = 2 * kDim;
  std::array<std::array<double, n>, n> a{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const Complex h = (*this)(i, j);
      a[i][j] = h.real();
      a[i + kDim][j + kDim] = h.real();
      a[i][j + kDim] = -h.imag();
      a[i + kDim][j] = h.imag();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, n> all{};
  for (std::size_t i = 0; i < n; ++i) all[i] = a[i][i];
  std::sort(all.begin(), all.end());
  std::array<double, kDim> out{};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = all[2 * i];
  return out;
}

nlohmann::json to_json(const ComplexMatrix10& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < ComplexMatrix10::kDim; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < ComplexMatrix10::kDim; ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dkp
