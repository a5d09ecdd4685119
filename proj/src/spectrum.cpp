#include "dkp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <tuple>

#include "dkp/errors.hpp"
#include "dkp/landau_basis.hpp"

namespace dkp {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw InvalidArgument(std::string(name) + " must be positive, got " + std::to_string(value));
}

}  // namespace

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::Scalar: return "SCALAR";
    case Branch::MinusB: return "MINUS_B";
    case Branch::PlusB: return "PLUS_B";
  }
  return "?";
}

Branch parse_branch(std::string_view name) {
  for (Branch b : {Branch::Scalar, Branch::MinusB, Branch::PlusB})
    if (branch_name(b) == name) return b;
  throw InvalidArgument("unknown branch '" + std::string(name) + "' (expected SCALAR, PLUS_B or MINUS_B)");
}

PrimedAmplitude nonvanishing_amplitude(Branch branch, Variant variant) {
  if (branch == Branch::Scalar) throw InvalidArgument("the scalar class has no (g, G) coupling");
  const bool plus = branch == Branch::PlusB;
  if (variant == Variant::A) return plus ? PrimedAmplitude::LowerG : PrimedAmplitude::UpperG;
  return plus ? PrimedAmplitude::UpperG : PrimedAmplitude::LowerG;
}

CouplingMatrix make_coupling_matrix(double B, double gamma_ratio) {
  CouplingMatrix c;
  c.B = B;
  c.gamma_ratio = gamma_ratio;
  c.entries = {{{0.0, 2.0 * kI * B}, {-2.0 * kI * B * gamma_ratio, 0.0}}};
  return c;
}

CouplingDiagonalization diagonalize_coupling(double gamma_ratio, Variant variant, double B) {
  if (!(gamma_ratio > 0.0))
    throw DegenerateError("coupling ratio (eps^2 - k^2)/M^2 must be positive, got " +
                          std::to_string(gamma_ratio));
  check_positive(B, "B");
  const double root = std::sqrt(gamma_ratio);
  const double lambda = 2.0 * B * root;
  CouplingDiagonalization d;
  if (variant == Variant::A) {
    d.S = {{{-kI * root, 1.0}, {kI * root, 1.0}}};
    d.eigenvalues = {lambda, -lambda};
  } else {
    d.S = {{{kI * root, 1.0}, {-kI * root, 1.0}}};
    d.eigenvalues = {-lambda, lambda};
  }
  return d;
}

Matrix2 multiply(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += lhs[i][k] * rhs[k][j];
  return out;
}

Matrix2 inverse(const Matrix2& m) {
  const Complex det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == Complex{}) throw DegenerateError("singular 2x2 matrix");
  return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

double transverse_energy(Branch branch, double lambda_sq, double B, double M) {
  check_positive(B, "B");
  check_positive(M, "M");
  switch (branch) {
    case Branch::Scalar: return std::sqrt(M * M + lambda_sq);
    case Branch::PlusB:
    case Branch::MinusB: {
      const double D = std::sqrt(B * B + M * M * (M * M + lambda_sq));
      return ((branch == Branch::PlusB ? B : -B) + D) / M;
    }
  }
  return 0.0;
}

Level energy(Branch branch, int n, int m, double k, double B, double M, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("energy sign must be +1 or -1");
  if (!std::isfinite(k)) throw InvalidArgument("longitudinal momentum k must be finite");
  Level level;
  level.branch = branch;
  level.n = n;
  level.m = m;
  level.k = k;
  level.B = B;
  level.M = M;
  level.lambda_sq = lambda_sq(n, m, B);
  const double u = transverse_energy(branch, level.lambda_sq, B, M);
  level.epsilon = sign * std::sqrt(k * k + u * u);
  return level;
}

std::vector<Level> enumerate_levels(int n_max, const std::vector<int>& m_values,
                                    const std::vector<double>& k_values, double B, double M) {
  check_positive(B, "B");
  check_positive(M, "M");
  if (n_max < 0) throw InvalidArgument("n_max must be >= 0");
  std::vector<Level> levels;
  levels.reserve(3 * static_cast<std::size_t>(n_max + 1) * m_values.size() * k_values.size());
  for (double k : k_values)
    for (int m : m_values)
      for (int n = 0; n <= n_max; ++n)
        for (Branch b : {Branch::Scalar, Branch::MinusB, Branch::PlusB})
          levels.push_back(energy(b, n, m, k, B, M));
  std::sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) {
    return std::tie(x.epsilon, x.branch, x.n, x.m, x.k) < std::tie(y.epsilon, y.branch, y.n, y.m, y.k);
  });
  return levels;
}

std::string format_sig9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value == 0.0 ? 0.0 : value);
  return buf;
}

void write_levels_csv(std::ostream& out, const std::vector<Level>& levels) {
  out << "branch,n,m,k,B,M,lambda_sq,epsilon\n";
  for (const auto& l : levels) {
    out << branch_name(l.branch) << ',' << l.n << ',' << l.m << ',' << format_sig9(l.k) << ','
        << format_sig9(l.B) << ',' << format_sig9(l.M) << ',' << format_sig9(l.lambda_sq) << ','
        << format_sig9(l.epsilon) << '\n';
  }
}

nlohmann::json to_json(const Level& l) {
  return {{"branch", branch_name(l.branch)}, {"n", l.n}, {"m", l.m}, {"k", l.k}, {"B", l.B},
          {"M", l.M}, {"lambda_sq", l.lambda_sq}, {"epsilon", l.epsilon}};
}

nlohmann::json levels_to_json(const std::vector<Level>& levels) {
  auto arr = nlohmann::json::array();
  for (const auto& l : levels) arr.push_back(to_json(l));
  return arr;
}

}  // namespace dkp
