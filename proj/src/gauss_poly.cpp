#include "dkp/gauss_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dkp/errors.hpp"

namespace dkp {
namespace {

constexpr double kReconstructionTol = 1e-9;
// Negative half-power contributions below this fraction of the operand's
// coefficient norm are rounding noise from cancellations and are dropped.
constexpr double kNoiseTol = 1e-12;

void check_B(double B) {
  if (!(B > 0.0) || !std::isfinite(B))
    throw InvalidArgument("magnetic parameter B must be positive and finite, got " + std::to_string(B));
}

[[noreturn]] void negative_power(const char* op, int m, int j) {
  throw DomainError(std::string(op) + "_" + std::to_string(m) + " maps x^(" + std::to_string(j) +
                    "/2) onto x^(" + std::to_string(j - 1) +
                    "/2): negative half-power outside the regular class");
}

}  // namespace

GaussPoly::GaussPoly(double B) : B_(B) { check_B(B); }

GaussPoly::GaussPoly(double B, std::vector<Complex> coeffs) : B_(B), coeffs_(std::move(coeffs)) {
  check_B(B);
  trim();
}

GaussPoly GaussPoly::monomial(double B, int j, Complex c) {
  if (j < 0) throw DomainError("negative half-power " + std::to_string(j) + " is not representable");
  std::vector<Complex> coeffs(static_cast<std::size_t>(j) + 1);
  coeffs.back() = c;
  return GaussPoly(B, std::move(coeffs));
}

Complex GaussPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return {};
  return coeffs_[static_cast<std::size_t>(j)];
}

int GaussPoly::lowest_power() const noexcept {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != Complex{}) return static_cast<int>(j);
  return -1;
}

double GaussPoly::coeff_norm() const noexcept {
  double sum = 0.0;
  for (const auto& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex GaussPoly::evaluate(double r) const {
  const double x = B_ * r * r;
  const double sx = std::sqrt(x);
  // Horner in sqrt(x).
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * sx + *it;
  return acc * std::exp(-0.5 * x);
}

void GaussPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

void GaussPoly::check_same_B(const GaussPoly& other) const {
  if (B_ != other.B_)
    throw InvalidArgument("GaussPoly arithmetic requires equal B (" + std::to_string(B_) + " vs " +
                          std::to_string(other.B_) + ")");
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& rhs) {
  check_same_B(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& rhs) {
  check_same_B(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

GaussPoly& GaussPoly::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

GaussPoly apply_a(int m, const GaussPoly& f) {
  if (f.is_zero()) return GaussPoly(f.B());
  const double s = std::sqrt(0.5 * f.B());
  const double noise = kNoiseTol * f.coeff_norm();
  std::vector<Complex> out(f.coeffs().size());
  for (int j = 0; j <= f.degree(); ++j) {
    const Complex c = f.coeff(j);
    if (c == Complex{} || j + m == 0) continue;
    if (j == 0) {
      if (std::abs(c) * std::abs(m) <= noise) continue;
      negative_power("a", m, j);
    }
    out[static_cast<std::size_t>(j - 1)] += s * static_cast<double>(j + m) * c;
  }
  return GaussPoly(f.B(), std::move(out));
}

GaussPoly apply_b(int m, const GaussPoly& f) {
  if (f.is_zero()) return GaussPoly(f.B());
  const double s = std::sqrt(0.5 * f.B());
  const double noise = kNoiseTol * f.coeff_norm();
  std::vector<Complex> out(f.coeffs().size() + 1);
  for (int j = 0; j <= f.degree(); ++j) {
    const Complex c = f.coeff(j);
    if (c == Complex{}) continue;
    out[static_cast<std::size_t>(j + 1)] += 2.0 * s * c;
    if (m - j == 0) continue;
    if (j == 0) {
      if (std::abs(c) * std::abs(m) <= noise) continue;
      negative_power("b", m, j);
    }
    out[static_cast<std::size_t>(j - 1)] += s * static_cast<double>(m - j) * c;
  }
  return GaussPoly(f.B(), std::move(out));
}

GaussPoly apply_delta(int m, const GaussPoly& f) {
  return -apply_b(m - 1, apply_a(m, f)) - apply_a(m + 1, apply_b(m, f));
}

GaussPoly solve_a(int m, const GaussPoly& z, double reference_norm) {
  const double scale = std::max(z.coeff_norm(), reference_norm);
  if (z.coeff_norm() <= kNoiseTol * scale) return GaussPoly(z.B());
  const double s = std::sqrt(0.5 * z.B());
  std::vector<Complex> out(static_cast<std::size_t>(z.degree()) + 2);
  double unmatched = 0.0;
  for (int p = 0; p <= z.degree(); ++p) {
    const Complex c = z.coeff(p);
    if (c == Complex{}) continue;
    const int factor = p + 1 + m;
    if (factor == 0) {
      unmatched = std::max(unmatched, std::abs(c));
      continue;
    }
    out[static_cast<std::size_t>(p + 1)] = c / (s * factor);
  }
  const double rel = unmatched / scale;
  if (rel > kReconstructionTol)
    throw ReconstructionError("a_" + std::to_string(m) + " has no regular preimage: x^(" +
                                  std::to_string(-m - 1) + "/2) lies outside its range",
                              rel);
  return GaussPoly(z.B(), std::move(out));
}

GaussPoly solve_b(int m, const GaussPoly& z, double reference_norm) {
  const double scale = std::max(z.coeff_norm(), reference_norm);
  if (z.coeff_norm() <= kNoiseTol * scale) return GaussPoly(z.B());
  const double s = std::sqrt(0.5 * z.B());
  const int top = z.degree() - 1;
  if (top < 0)
    throw ReconstructionError("b_" + std::to_string(m) + " cannot produce a pure x^0 term", 1.0);

  // z_p = s [ (m - p - 1) f_{p+1} + 2 f_{p-1} ], solved from the top down.
  std::vector<Complex> f(static_cast<std::size_t>(top) + 2);
  auto at = [&f](int j) -> Complex& { return f[static_cast<std::size_t>(j)]; };
  at(top) = z.coeff(top + 1) / (2.0 * s);
  for (int p = top; p >= 1; --p) {
    const Complex upper = (p + 1 <= top) ? at(p + 1) : Complex{};
    at(p - 1) = (z.coeff(p) / s - static_cast<double>(m - p - 1) * upper) / 2.0;
  }

  // Remaining conditions: the x^0 coefficient, and no x^{-1/2} term.
  const Complex x0_mismatch = s * static_cast<double>(m - 1) * (top >= 1 ? at(1) : Complex{}) - z.coeff(0);
  const Complex singular = s * static_cast<double>(m) * at(0);
  const double rel = std::max(std::abs(x0_mismatch), std::abs(singular)) / scale;
  if (rel > kReconstructionTol)
    throw ReconstructionError("b_" + std::to_string(m) +
                                  " has no regular preimage (coefficient matching leaves residual " +
                                  std::to_string(rel) + ")",
                              rel);
  if (m != 0) at(0) = 0.0;
  return GaussPoly(z.B(), std::move(f));
}

namespace {

long double half_integer_gamma_ld(int twice_arg) {
  long double g = (twice_arg % 2 == 0) ? 1.0L : std::sqrt(std::numbers::pi_v<long double>);
  for (int t = (twice_arg % 2 == 0) ? 2 : 1; t < twice_arg; t += 2) g *= 0.5L * t;
  return g;
}

}  // namespace

double half_integer_gamma(int twice_arg) {
  if (twice_arg <= 0) throw InvalidArgument("half_integer_gamma needs a positive argument");
  return static_cast<double>(half_integer_gamma_ld(twice_arg));
}

Complex inner_product(const GaussPoly& f, const GaussPoly& g) {
  if (f.B() != g.B()) throw InvalidArgument("inner product requires equal B");
  // int x^{(j+j')/2} e^{-x} dx / (2B) = Gamma((j+j')/2 + 1) / (2B).
  // Extended precision: high-degree modes cancel strongly in this sum.
  using LComplex = std::complex<long double>;
  LComplex sum{};
  for (int j = 0; j <= f.degree(); ++j) {
    const Complex cf = std::conj(f.coeff(j));
    if (cf == Complex{}) continue;
    for (int k = 0; k <= g.degree(); ++k) {
      const Complex cg = g.coeff(k);
      if (cg == Complex{}) continue;
      sum += LComplex(cf) * LComplex(cg) * half_integer_gamma_ld(j + k + 2);
    }
  }
  return Complex(sum / (2.0L * f.B()));
}

double norm_squared(const GaussPoly& f) { return inner_product(f, f).real(); }

double max_coeff_diff(const GaussPoly& f, const GaussPoly& g) {
  const int top = std::max(f.degree(), g.degree());
  double worst = 0.0;
  for (int j = 0; j <= top; ++j) worst = std::max(worst, std::abs(f.coeff(j) - g.coeff(j)));
  return worst;
}

nlohmann::json to_json(const GaussPoly& f) {
  auto coeffs = nlohmann::json::array();
  for (int j = 0; j <= f.degree(); ++j) {
    const Complex c = f.coeff(j);
    if (c != Complex{}) coeffs.push_back({j, c.real(), c.imag()});
  }
  return {{"B", f.B()}, {"coeffs", std::move(coeffs)}};
}

GaussPoly gauss_poly_from_json(const nlohmann::json& j) {
  const double B = j.at("B").get<double>();
  std::vector<Complex> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    const int power = entry.at(0).get<int>();
    if (power < 0) throw DomainError("negative half-power in GaussPoly JSON");
    if (static_cast<std::size_t>(power) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += Complex(entry.at(1).get<double>(), entry.at(2).get<double>());
  }
  return GaussPoly(B, std::move(coeffs));
}

}  // namespace dkp
