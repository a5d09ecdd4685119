#include "dkp/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "dkp/errors.hpp"
#include "dkp/landau_basis.hpp"

namespace dkp {
namespace {

constexpr Complex kI{0.0, 1.0};

double max_norm(std::span<const GaussPoly* const> polys) {
  double worst = 0.0;
  for (const auto* p : polys) worst = std::max(worst, p->coeff_norm());
  return worst;
}

double max_norm(std::initializer_list<GaussPoly> polys) {
  double worst = 0.0;
  for (const auto& p : polys) worst = std::max(worst, p.coeff_norm());
  return worst;
}

double transverse_squared(const TenComponentState& s) { return s.epsilon * s.epsilon - s.k * s.k; }

TenComponentState skeleton(Branch branch, int n, int m, double k, double B, double M) {
  TenComponentState s;
  const Level level = energy(branch, n, m, k, B, M);
  s.branch = branch;
  s.n = n;
  s.m = m;
  s.k = k;
  s.B = B;
  s.M = M;
  s.epsilon = level.epsilon;
  for (auto* c : s.components()) *c = GaussPoly(B);
  if (!(transverse_squared(s) > 0.0))
    throw DegenerateError("eps^2 == k^2: the (F, G) inversion is singular");
  return s;
}

}  // namespace

ScalarQuadruple scalar_quadruple(const TenComponentState& s) {
  const auto z1 = apply_b(s.m - 1, s.phi1);
  const auto z3 = apply_a(s.m + 1, s.phi3);
  return {s.k * s.phi0 + s.epsilon * s.phi2, s.epsilon * s.phi0 + s.k * s.phi2, z1 + z3, z1 - z3};
}

void complete_field_components(TenComponentState& s) {
  const int m = s.m;
  const double eps = s.epsilon, k = s.k;
  const Complex inv_M = 1.0 / s.M;
  s.e1 = (apply_a(m, s.phi0) - kI * eps * s.phi1) * inv_M;
  s.h1 = (-kI * apply_a(m, s.phi2) + k * s.phi1) * inv_M;
  s.e3 = (apply_b(m, s.phi0) - kI * eps * s.phi3) * inv_M;
  s.h3 = (kI * apply_b(m, s.phi2) - k * s.phi3) * inv_M;
  s.e2 = (-kI * eps * s.phi2 - kI * k * s.phi0) * inv_M;
  s.h2 = (kI * apply_b(m - 1, s.phi1) - kI * apply_a(m + 1, s.phi3)) * inv_M;
}

void normalize(TenComponentState& s) {
  double total = 0.0;
  const GaussPoly* dominant = nullptr;
  double dominant_norm = -1.0;
  for (const auto* c : std::as_const(s).components()) {
    const double nsq = norm_squared(*c);
    total += nsq;
    if (nsq > dominant_norm) {
      dominant_norm = nsq;
      dominant = c;
    }
  }
  if (!(total > 0.0)) return;
  const Complex lead = dominant->coeff(dominant->lowest_power());
  const Complex factor = std::conj(lead) / std::abs(lead) / std::sqrt(total);
  for (auto* c : s.components()) *c *= factor;
}

TenComponentState build_scalar_class(int n, int m, double k, double B, double M) {
  auto s = skeleton(Branch::Scalar, n, m, k, B, M);
  const auto mode = build_mode(n, m, B);
  s.phi0 = k * mode.radial;
  s.phi2 = -s.epsilon * mode.radial;
  complete_field_components(s);
  normalize(s);
  return s;
}

TenComponentState build_branch_state(Branch branch, Variant variant, int n, int m, double k, double B,
                                     double M) {
  if (branch == Branch::Scalar)
    throw InvalidArgument("build_branch_state needs PLUS_B or MINUS_B; use build_scalar_class");
  auto s = skeleton(branch, n, m, k, B, M);
  s.variant = variant;
  const double u_sq = transverse_squared(s);
  const double gamma_ratio = u_sq / (M * M);
  const auto diag = diagonalize_coupling(gamma_ratio, variant, B);
  const auto mode = build_mode(n, m, B);

  // (g', G') carries phi_{n,m} in exactly one slot; back-transform with S^{-1}.
  const bool lower = nonvanishing_amplitude(branch, variant) == PrimedAmplitude::LowerG;
  const Matrix2 s_inv = inverse(diag.S);
  const std::size_t col = lower ? 0 : 1;
  const GaussPoly g = s_inv[0][col] * mode.radial;
  const GaussPoly G = s_inv[1][col] * mode.radial;
  const GaussPoly f = -kI * G + (2.0 * B / (M * M)) * g;

  // F = 0: Phi_0 = -eps G / (k^2 - eps^2), Phi_2 = k G / (k^2 - eps^2).
  const double denom = k * k - s.epsilon * s.epsilon;
  s.phi0 = (-s.epsilon / denom) * G;
  s.phi2 = (k / denom) * G;

  const GaussPoly z1 = 0.5 * (f + g);
  const GaussPoly z3 = 0.5 * (f - g);
  const double reference = std::max(f.coeff_norm(), g.coeff_norm());
  s.phi1 = solve_b(m - 1, z1, reference);
  s.phi3 = solve_a(m + 1, z3, reference);

  // For m <= -1, a_{m+1} annihilates x^{-(m+1)/2}; that component of Phi_3 is
  // fixed by the Phi_3 equation itself, W Phi_3 + b_m(g + iG) = 0.
  const double W = u_sq - M * M;
  const int kernel_power = -m - 1;
  if (kernel_power >= 0 && std::abs(W) > 1e-12 * (u_sq + M * M)) {
    const GaussPoly eq4 =
        W * s.phi3 + apply_b(m, apply_b(m - 1, s.phi1) - apply_a(m + 1, s.phi3) + kI * G);
    const Complex alpha = eq4.coeff(kernel_power);
    s.phi3 -= GaussPoly::monomial(B, kernel_power, alpha / W);
  }

  complete_field_components(s);
  normalize(s);
  return s;
}

TenComponentState build_state(Branch branch, int n, int m, double k, double B, double M, Variant variant) {
  if (branch == Branch::Scalar) return build_scalar_class(n, m, k, B, M);
  return build_branch_state(branch, variant, n, m, k, B, M);
}

double residual(const TenComponentState& s) {
  const double scale = max_norm(s.components());
  if (scale == 0.0) return 0.0;
  const int m = s.m;
  const double eps = s.epsilon, k = s.k, M = s.M;
  try {
    const double worst = max_norm({
        -apply_b(m - 1, s.e1) - apply_a(m + 1, s.e3) - kI * k * s.e2 - M * s.phi0,
        -kI * apply_b(m - 1, s.h1) + kI * apply_a(m + 1, s.h3) + kI * eps * s.e2 - M * s.phi2,
        kI * apply_a(m, s.h2) + kI * eps * s.e1 - k * s.h1 - M * s.phi1,
        -kI * apply_b(m, s.h2) + kI * eps * s.e3 + k * s.h3 - M * s.phi3,
        apply_a(m, s.phi0) - kI * eps * s.phi1 - M * s.e1,
        -kI * apply_a(m, s.phi2) + k * s.phi1 - M * s.h1,
        apply_b(m, s.phi0) - kI * eps * s.phi3 - M * s.e3,
        kI * apply_b(m, s.phi2) - k * s.phi3 - M * s.h3,
        -kI * eps * s.phi2 - kI * k * s.phi0 - M * s.e2,
        kI * apply_b(m - 1, s.phi1) - kI * apply_a(m + 1, s.phi3) - M * s.h2,
    });
    return worst / scale;
  } catch (const DomainError&) {
    return std::numeric_limits<double>::infinity();
  }
}

double verify_second_order(const TenComponentState& s) {
  const std::array<const GaussPoly*, 4> block = {&s.phi0, &s.phi1, &s.phi2, &s.phi3};
  const double scale = max_norm(block);
  if (scale == 0.0) return 0.0;
  const int m = s.m;
  const double eps = s.epsilon, k = s.k, M = s.M;
  const double w = eps * eps - k * k - M * M;
  try {
    const auto f = apply_b(m - 1, s.phi1) + apply_a(m + 1, s.phi3);
    const double worst = max_norm({
        apply_delta(m, s.phi0) - (k * k + M * M) * s.phi0 - eps * k * s.phi2 + kI * eps * f,
        apply_delta(m, s.phi2) + (eps * eps - M * M) * s.phi2 + eps * k * s.phi0 - kI * k * f,
        -apply_a(m, apply_b(m - 1, s.phi1)) + w * s.phi1 + apply_a(m, apply_a(m + 1, s.phi3)) +
            kI * eps * apply_a(m, s.phi0) + kI * k * apply_a(m, s.phi2),
        -apply_b(m, apply_a(m + 1, s.phi3)) + w * s.phi3 + apply_b(m, apply_b(m - 1, s.phi1)) +
            kI * eps * apply_b(m, s.phi0) + kI * k * apply_b(m, s.phi2),
    });
    return worst / scale;
  } catch (const DomainError&) {
    return std::numeric_limits<double>::infinity();
  }
}

nlohmann::json to_json(const TenComponentState& s) {
  nlohmann::json j{{"branch", branch_name(s.branch)},
                   {"n", s.n},
                   {"m", s.m},
                   {"k", s.k},
                   {"B", s.B},
                   {"M", s.M},
                   {"epsilon", s.epsilon}};
  if (s.variant) j["variant"] = *s.variant == Variant::A ? "A" : "B";
  auto comps = nlohmann::json::object();
  const auto c = s.components();
  for (std::size_t i = 0; i < c.size(); ++i) comps[std::string(TenComponentState::kNames[i])] = to_json(*c[i]);
  j["components"] = std::move(comps);
  return j;
}

void write_sampled_csv(std::ostream& out, const TenComponentState& s, std::span<const double> radii) {
  out << 'r';
  for (auto name : TenComponentState::kNames) out << ',' << name << "_re," << name << "_im";
  out << '\n';
  const auto comps = s.components();
  for (double r : radii) {
    out << format_sig9(r);
    for (const auto* c : comps) {
      const Complex v = c->evaluate(r);
      out << ',' << format_sig9(v.real()) << ',' << format_sig9(v.imag());
    }
    out << '\n';
  }
}

}  // namespace dkp
