#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/landau_basis.hpp"
#include "dkp/wavefunction.hpp"

using dkp::Branch;
using dkp::Complex;
using dkp::GaussPoly;
using dkp::TenComponentState;
using dkp::Variant;

namespace {

const Complex I{0.0, 1.0};

double max_diff(const GaussPoly& a, const GaussPoly& b) { return dkp::max_coeff_diff(a, b); }

double total_norm(const TenComponentState& s) {
  double sum = 0.0;
  for (const auto* c : s.components()) sum += dkp::norm_squared(*c);
  return sum;
}

double largest_component(const TenComponentState& s) {
  double out = 0.0;
  for (const auto* c : s.components()) out = std::max(out, c->coeff_norm());
  return out;
}

// Pointwise ladder operators from central differences of evaluate().
struct Pointwise {
  const GaussPoly& f;
  double B;
  Complex value(double r) const { return f.evaluate(r); }
  Complex deriv(double r) const {
    const double h = 1e-5;
    return (f.evaluate(r + h) - f.evaluate(r - h)) / (2.0 * h);
  }
  Complex a(int m, double r) const { return (deriv(r) + (m + B * r * r) / r * value(r)) / std::sqrt(2.0); }
  Complex b(int m, double r) const { return (-deriv(r) + (m + B * r * r) / r * value(r)) / std::sqrt(2.0); }
};

// Largest of the ten first-order equations evaluated pointwise, relative to the
// largest component magnitude over the same sample points.
double pointwise_residual(const TenComponentState& s) {
  const int m = s.m;
  const double eps = s.epsilon, k = s.k, M = s.M, B = s.B;
  double worst = 0.0, scale = 0.0;
  for (double r : {0.35, 0.8, 1.3, 2.1, 3.0}) {
    auto P = [&](const GaussPoly& f) { return Pointwise{f, B}; };
    const std::array<Complex, 10> eq = {
        -P(s.e1).b(m - 1, r) - P(s.e3).a(m + 1, r) - I * k * s.e2.evaluate(r) - M * s.phi0.evaluate(r),
        -I * P(s.h1).b(m - 1, r) + I * P(s.h3).a(m + 1, r) + I * eps * s.e2.evaluate(r) - M * s.phi2.evaluate(r),
        I * P(s.h2).a(m, r) + I * eps * s.e1.evaluate(r) - k * s.h1.evaluate(r) - M * s.phi1.evaluate(r),
        -I * P(s.h2).b(m, r) + I * eps * s.e3.evaluate(r) + k * s.h3.evaluate(r) - M * s.phi3.evaluate(r),
        P(s.phi0).a(m, r) - I * eps * s.phi1.evaluate(r) - M * s.e1.evaluate(r),
        -I * P(s.phi2).a(m, r) + k * s.phi1.evaluate(r) - M * s.h1.evaluate(r),
        P(s.phi0).b(m, r) - I * eps * s.phi3.evaluate(r) - M * s.e3.evaluate(r),
        I * P(s.phi2).b(m, r) - k * s.phi3.evaluate(r) - M * s.h3.evaluate(r),
        -I * eps * s.phi2.evaluate(r) - I * k * s.phi0.evaluate(r) - M * s.e2.evaluate(r),
        I * P(s.phi1).b(m - 1, r) - I * P(s.phi3).a(m + 1, r) - M * s.h2.evaluate(r),
    };
    for (const auto& e : eq) worst = std::max(worst, std::abs(e));
    for (const auto* c : s.components()) scale = std::max(scale, std::abs(c->evaluate(r)));
  }
  return worst / scale;
}

struct Case {
  Branch branch;
  int n, m;
  double k, B, M;
};

std::vector<Case> scan() {
  std::vector<Case> out;
  for (Branch b : {Branch::Scalar, Branch::MinusB, Branch::PlusB})
    for (int n = 0; n <= 4; ++n)
      for (int m = -3; m <= 3; ++m)
        for (double k : {0.0, 0.7})
          for (double B : {0.5, 1.0})
            for (double M : {1.0, 2.0}) {
              if (b == Branch::MinusB && n == 0 && m <= 0) continue;
              out.push_back({b, n, m, k, B, M});
            }
  return out;
}

}  // namespace

TEST_CASE("scalar class at k = 0 has no Phi_0") {
  const auto s = dkp::build_scalar_class(1, -1, 0.0, 1.0, 1.0);
  CHECK(s.phi0.is_zero());
  CHECK(s.phi1.is_zero());
  CHECK(s.phi3.is_zero());
  CHECK_FALSE(s.phi2.is_zero());
}

TEST_CASE("scalar class: H_2 vanishes identically and G = 0") {
  for (int n = 0; n <= 3; ++n) {
    for (int m = -2; m <= 2; ++m) {
      const auto s = dkp::build_scalar_class(n, m, 0.7, 0.5, 2.0);
      CHECK(s.h2.is_zero());
      const auto q = dkp::scalar_quadruple(s);
      CHECK(q.G.coeff_norm() <= 1e-12 * largest_component(s));
    }
  }
}

TEST_CASE("residual examples") {
  CHECK(dkp::residual(dkp::build_scalar_class(0, 0, 1.0, 1.0, 1.0)) <= 1e-10);
  const auto plus = dkp::build_branch_state(Branch::PlusB, Variant::A, 0, 0, 0.0, 1.0, 1.0);
  CHECK(plus.epsilon == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(dkp::residual(plus) <= 1e-10);
}

TEST_CASE("every state in the scan satisfies the first- and second-order systems") {
  for (const auto& c : scan()) {
    CAPTURE(static_cast<int>(c.branch));
    CAPTURE(c.n);
    CAPTURE(c.m);
    CAPTURE(c.k);
    CAPTURE(c.B);
    CAPTURE(c.M);
    const auto s = dkp::build_state(c.branch, c.n, c.m, c.k, c.B, c.M);
    CHECK(dkp::residual(s) <= 1e-10);
    CHECK(dkp::verify_second_order(s) <= 1e-10);
    CHECK(total_norm(s) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pointwise finite-difference check of the ten equations") {
  // Central differences with h = 1e-5 limit the attainable agreement to ~1e-7.
  for (const auto& c : std::vector<Case>{{Branch::Scalar, 1, -2, 0.7, 1.0, 1.0},
                                         {Branch::PlusB, 0, 0, 0.0, 1.0, 1.0},
                                         {Branch::PlusB, 2, 1, 0.7, 0.5, 2.0},
                                         {Branch::MinusB, 1, -3, 0.7, 1.0, 2.0},
                                         {Branch::MinusB, 0, 2, 0.0, 0.5, 1.0}}) {
    const auto s = dkp::build_state(c.branch, c.n, c.m, c.k, c.B, c.M);
    CHECK(pointwise_residual(s) <= 1e-6);
  }
}

TEST_CASE("branch states: F = 0 and f + iG - (2B/M^2) g = 0") {
  for (const auto& c : scan()) {
    if (c.branch == Branch::Scalar) continue;
    const auto s = dkp::build_state(c.branch, c.n, c.m, c.k, c.B, c.M);
    const auto q = dkp::scalar_quadruple(s);
    const double scale = largest_component(s);
    CHECK(q.F.coeff_norm() <= 1e-12 * scale);
    CHECK((q.f + I * q.G - (2.0 * c.B / (c.M * c.M)) * q.g).coeff_norm() <= 1e-12 * scale);
  }
}

TEST_CASE("recovered g solves its separated equation") {
  // (Delta + W - lambda) g = 0 with W = eps^2 - k^2 - M^2 and lambda the coupling
  // eigenvalue of the branch.
  for (Branch b : {Branch::PlusB, Branch::MinusB}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m : {-2, 0, 2}) {
        const double k = 0.7, B = 1.0, M = 1.0;
        const auto s = dkp::build_branch_state(b, Variant::A, n, m, k, B, M);
        const auto q = dkp::scalar_quadruple(s);
        const double u_sq = s.epsilon * s.epsilon - k * k;
        const double W = u_sq - M * M;
        const double lambda = (b == Branch::PlusB ? 1.0 : -1.0) * 2.0 * B * std::sqrt(u_sq) / M;
        CHECK((dkp::apply_delta(m, q.g) + (W - lambda) * q.g).coeff_norm() <= 1e-10 * q.g.coeff_norm());
        CHECK((dkp::apply_delta(m, q.G) + (W - lambda) * q.G).coeff_norm() <= 1e-10 * q.G.coeff_norm());
        // Primed amplitudes: only the selected one survives.
        const auto d = dkp::diagonalize_coupling(u_sq / (M * M), Variant::A, B);
        const GaussPoly upper = d.S[0][0] * q.g + d.S[0][1] * q.G;
        const GaussPoly lower = d.S[1][0] * q.g + d.S[1][1] * q.G;
        if (b == Branch::PlusB) CHECK(lower.coeff_norm() <= 1e-12 * upper.coeff_norm());
        else CHECK(upper.coeff_norm() <= 1e-12 * lower.coeff_norm());
      }
    }
  }
}

TEST_CASE("reconstruction consistency and the algebraic Phi_1, Phi_3") {
  for (const auto& c : scan()) {
    if (c.branch == Branch::Scalar) continue;
    const auto s = dkp::build_state(c.branch, c.n, c.m, c.k, c.B, c.M);
    const auto q = dkp::scalar_quadruple(s);
    const double scale = largest_component(s);
    CHECK(max_diff(dkp::apply_b(c.m - 1, s.phi1), 0.5 * (q.f + q.g)) <= 1e-10 * scale);
    CHECK(max_diff(dkp::apply_a(c.m + 1, s.phi3), 0.5 * (q.f - q.g)) <= 1e-10 * scale);
    // Phi_1 = a_m (g - iG) / W and Phi_3 = -b_m (g + iG) / W follow from the second-order block.
    const double W = s.epsilon * s.epsilon - c.k * c.k - c.M * c.M;
    CHECK(max_diff(s.phi1, (1.0 / W) * dkp::apply_a(c.m, q.g - I * q.G)) <= 1e-10 * scale);
    CHECK(max_diff(s.phi3, (-1.0 / W) * dkp::apply_b(c.m, q.g + I * q.G)) <= 1e-10 * scale);
  }
}

TEST_CASE("MINUS_B ground levels with m <= 0 have no regular Phi_1") {
  for (int m = -3; m <= 0; ++m) {
    for (double k : {0.0, 0.7}) {
      try {
        (void)dkp::build_branch_state(Branch::MinusB, Variant::A, 0, m, k, 1.0, 1.0);
        FAIL("expected ReconstructionError");
      } catch (const dkp::ReconstructionError& e) {
        CHECK(e.residual() > 1e-3);
      }
    }
  }
  CHECK_NOTHROW(dkp::build_branch_state(Branch::MinusB, Variant::A, 0, 1, 0.0, 1.0, 1.0));
}

TEST_CASE("variants A and B give the same normalized state") {
  for (Branch b : {Branch::PlusB, Branch::MinusB}) {
    for (int m : {-1, 0, 2}) {
      const auto a = dkp::build_branch_state(b, Variant::A, 2, m, 0.7, 0.5, 1.0);
      const auto v = dkp::build_branch_state(b, Variant::B, 2, m, 0.7, 0.5, 1.0);
      CHECK(*a.variant == Variant::A);
      CHECK(*v.variant == Variant::B);
      const auto ca = a.components();
      const auto cb = v.components();
      for (std::size_t i = 0; i < ca.size(); ++i) CHECK(max_diff(*ca[i], *cb[i]) <= 1e-12);
    }
  }
}

TEST_CASE("perturbing Phi_2 by 1% of the next mode is detected") {
  for (Branch b : {Branch::Scalar, Branch::PlusB, Branch::MinusB}) {
    auto s = dkp::build_state(b, 1, 1, 0.7, 1.0, 1.0);
    s.phi2 += 0.01 * dkp::build_mode(2, 1, 1.0).radial;
    CHECK(dkp::residual(s) > 1e-4);
  }
}

TEST_CASE("zero state has zero residuals") {
  TenComponentState zero;
  CHECK(dkp::residual(zero) == 0.0);
  CHECK(dkp::verify_second_order(zero) == 0.0);
}

TEST_CASE("degenerate and invalid inputs") {
  CHECK_THROWS_AS(dkp::build_branch_state(Branch::Scalar, Variant::A, 0, 0, 0.0, 1.0, 1.0), dkp::InvalidArgument);
  CHECK_THROWS_AS(dkp::build_scalar_class(-1, 0, 0.0, 1.0, 1.0), dkp::InvalidArgument);
}

TEST_CASE("the three classes are linearly independent") {
  const int n = 1, m = -1;
  const double k = 0.7, B = 1.0, M = 1.0;
  const std::array<TenComponentState, 3> states = {dkp::build_state(Branch::Scalar, n, m, k, B, M),
                                                   dkp::build_state(Branch::MinusB, n, m, k, B, M),
                                                   dkp::build_state(Branch::PlusB, n, m, k, B, M)};
  // Gram matrix of the states under the sum of component inner products.
  std::array<std::array<Complex, 3>, 3> g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto ci = states[i].components();
      const auto cj = states[j].components();
      for (std::size_t c = 0; c < ci.size(); ++c) g[i][j] += dkp::inner_product(*ci[c], *cj[c]);
    }
  const Complex det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                      g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                      g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  CHECK(std::abs(det) > 1e-3);
}

TEST_CASE("normalization and phase convention") {
  const auto s = dkp::build_state(Branch::PlusB, 2, -2, 0.7, 0.5, 2.0);
  CHECK(total_norm(s) == doctest::Approx(1.0).epsilon(1e-13));
  const GaussPoly* dominant = nullptr;
  for (const auto* c : s.components())
    if (!dominant || c->coeff_norm() > dominant->coeff_norm()) dominant = c;
  const Complex lead = dominant->coeff(dominant->lowest_power());
  CHECK(lead.real() > 0.0);
  CHECK(lead.imag() == 0.0);
}

TEST_CASE("JSON and sampled CSV export") {
  const auto s = dkp::build_state(Branch::MinusB, 1, 0, 0.0, 1.0, 1.0);
  const auto j = dkp::to_json(s);
  CHECK(j.at("branch").get<std::string>() == "MINUS_B");
  CHECK(j.at("variant").get<std::string>() == "A");
  CHECK(j.at("epsilon").get<double>() == s.epsilon);
  REQUIRE(j.at("components").size() == 10);
  const auto phi1 = dkp::gauss_poly_from_json(j.at("components").at("phi1"));
  CHECK(max_diff(phi1, s.phi1) == 0.0);
  CHECK(dkp::to_json(dkp::build_scalar_class(0, 0, 0.0, 1.0, 1.0)).count("variant") == 0);

  std::ostringstream csv;
  const std::vector<double> radii = {0.0, 0.5, 1.0};
  dkp::write_sampled_csv(csv, s, radii);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("r,phi0_re,phi0_im,phi1_re", 0) == 0);
  CHECK(line.find("h3_im") != std::string::npos);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 20);
  }
  CHECK(rows == 3);
}
