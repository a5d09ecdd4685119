#include "dkp/dkp_algebra.hpp"

#include <array>
#include <cmath>
#include <string>

#include "dkp/errors.hpp"

namespace dkp {
namespace {

using Row3 = std::array<Complex, 3>;
using Mat3 = std::array<Row3, 3>;

constexpr Complex kI{0.0, 1.0};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Row3 e_vector(int i) {
  switch (i) {
    case 1: return {-kI * kInvSqrt2, 0.0, kI * kInvSqrt2};
    case 2: return {Complex{kInvSqrt2}, 0.0, Complex{kInvSqrt2}};
    default: return {0.0, kI, 0.0};
  }
}

Mat3 tau_matrix(int i) {
  const Complex s = kInvSqrt2;
  switch (i) {
    case 1: return {{{0.0, s, 0.0}, {s, 0.0, s}, {0.0, s, 0.0}}};
    case 2: return {{{0.0, -kI * s, 0.0}, {kI * s, 0.0, -kI * s}, {0.0, kI * s, 0.0}}};
    default: return {{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}}};
  }
}

constexpr std::size_t kPhi = 1;
constexpr std::size_t kE = 4;
constexpr std::size_t kH = 7;

}  // namespace

int metric(int a, int b) {
  if (a != b) return 0;
  return a == 0 ? 1 : -1;
}

ComplexMatrix10 build_beta(int a) {
  if (a < 0 || a > 3)
    throw InvalidArgument("beta index must be in 0..3, got " + std::to_string(a));

  ComplexMatrix10 beta;
  if (a == 0) {
    for (std::size_t k = 0; k < 3; ++k) {
      beta(kPhi + k, kE + k) = kI;
      beta(kE + k, kPhi + k) = -kI;
    }
    return beta;
  }

  const Row3 e = e_vector(a);
  const Mat3 tau = tau_matrix(a);
  for (std::size_t k = 0; k < 3; ++k) {
    beta(0, kE + k) = e[k];
    beta(kE + k, 0) = -std::conj(e[k]);
    for (std::size_t l = 0; l < 3; ++l) {
      beta(kPhi + k, kH + l) = tau[k][l];
      beta(kH + k, kPhi + l) = -tau[k][l];
    }
  }
  return beta;
}

ComplexMatrix10 build_J12() {
  const auto b1 = build_beta(1);
  const auto b2 = build_beta(2);
  return b1 * b2 - b2 * b1;
}

ComplexMatrix10 build_S3() {
  ComplexMatrix10 s3;
  for (std::size_t block : {kPhi, kE, kH}) {
    s3(block, block) = 1.0;
    s3(block + 2, block + 2) = -1.0;
  }
  return s3;
}

bool verify_trilinear(int a, int b, int c, double tol) {
  const auto ba = build_beta(a);
  const auto bb = build_beta(b);
  const auto bc = build_beta(c);
  const auto lhs = ba * bb * bc + bc * bb * ba;
  const auto rhs = Complex(metric(b, c)) * ba + Complex(metric(b, a)) * bc;
  return lhs.max_abs_diff(rhs) <= tol;
}

}  // namespace dkp
