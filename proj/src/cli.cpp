#include "dkp/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dkp/errors.hpp"
#include "dkp/spectrum.hpp"
#include "dkp/verification.hpp"
#include "dkp/wavefunction.hpp"

namespace dkp::cli {
namespace {

constexpr int kMaxQuantumNumber = 30;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything the three commands can be configured with.
struct RunConfig {
  double B = 1.0;
  double M = 1.0;
  std::vector<double> k_values{0.0};
  int n_max = 0;
  std::vector<int> m_values;
  int m_min = 0;
  int m_max = 0;
  std::string branch = "all";
  std::string format = "csv";
  std::string output;
  bool plot_data = false;

  // wavefunction
  int n = 0;
  int m = 0;
  double k = 0.0;
  std::string variant = "A";
  double r_max = 0.0;
  int points = 201;
  std::string json_output;

  // verify
  bool quick = false;
  bool inject_perturbation = false;
  int fd_points = 4000;
  double x_max = 60.0;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void validate_physics(const RunConfig& c) {
  require(c.B > 0.0 && std::isfinite(c.B), "--B must satisfy B > 0");
  require(c.M > 0.0 && std::isfinite(c.M), "--M must satisfy M > 0");
  require(c.format == "csv" || c.format == "json", "--format must be csv or json");
}

std::vector<int> selected_m(const RunConfig& c) {
  if (!c.m_values.empty()) return c.m_values;
  require(c.m_min <= c.m_max, "--m-min must not exceed --m-max");
  std::vector<int> ms;
  for (int m = c.m_min; m <= c.m_max; ++m) ms.push_back(m);
  return ms;
}

/// Writes to the named file, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::string& content) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::string sibling_path(const std::string& path, const std::string& extension) {
  return std::filesystem::path(path).replace_extension(extension).string();
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  validate_physics(c);
  require(c.n_max >= 0, "--n-max must be >= 0");
  require(!c.k_values.empty(), "--k needs at least one value");
  const auto ms = selected_m(c);
  std::optional<Branch> filter;
  if (c.branch != "all") filter = parse_branch(c.branch);

  auto levels = enumerate_levels(c.n_max, ms, c.k_values, c.B, c.M);
  if (filter) std::erase_if(levels, [&](const Level& l) { return l.branch != *filter; });

  std::ostringstream body;
  if (c.format == "json")
    body << levels_to_json(levels).dump(2) << '\n';
  else
    write_levels_csv(body, levels);
  emit(c.output, out, body.str());

  if (c.plot_data) {
    require(!c.output.empty(), "--plot-data needs --output");
    std::ostringstream dat;
    dat << "# m epsilon branch n k\n";
    for (const auto& l : levels)
      dat << l.m << ' ' << format_sig9(l.epsilon) << ' ' << branch_name(l.branch) << ' ' << l.n << ' '
          << format_sig9(l.k) << '\n';
    emit(sibling_path(c.output, ".dat"), out, dat.str());
  }
  return kOk;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& err) {
  validate_physics(c);
  require(c.n >= 0 && c.n <= kMaxQuantumNumber, "--n must be in 0.." + std::to_string(kMaxQuantumNumber));
  require(std::abs(c.m) <= kMaxQuantumNumber, "|--m| must not exceed " + std::to_string(kMaxQuantumNumber));
  require(c.points >= 2, "--points must be >= 2");
  require(c.variant == "A" || c.variant == "B", "--variant must be A or B");
  require(c.branch != "all", "--branch must name SCALAR, PLUS_B or MINUS_B");
  const Branch branch = parse_branch(c.branch);
  const Variant variant = c.variant == "A" ? Variant::A : Variant::B;

  const auto state = build_state(branch, c.n, c.m, c.k, c.B, c.M, variant);
  const double res = residual(state);
  const double res2 = verify_second_order(state);

  const double r_max = c.r_max > 0.0 ? c.r_max : std::sqrt(40.0 / c.B);
  std::vector<double> radii(static_cast<std::size_t>(c.points));
  for (int i = 0; i < c.points; ++i) radii[static_cast<std::size_t>(i)] = r_max * i / (c.points - 1);

  std::ostringstream csv;
  write_sampled_csv(csv, state, radii);
  emit(c.output, out, csv.str());

  std::string json_path = c.json_output;
  if (json_path.empty() && !c.output.empty()) json_path = sibling_path(c.output, ".json");
  if (!json_path.empty()) {
    auto j = to_json(state);
    j["residual"] = res;
    j["second_order_residual"] = res2;
    emit(json_path, out, j.dump(2) + "\n");
  }

  if (c.plot_data) {
    require(!c.output.empty(), "--plot-data needs --output");
    std::ostringstream dat;
    dat << "# r";
    for (auto name : TenComponentState::kNames) dat << " |" << name << '|';
    dat << '\n';
    for (double r : radii) {
      dat << format_sig9(r);
      for (const auto* comp : state.components()) dat << ' ' << format_sig9(std::abs(comp->evaluate(r)));
      dat << '\n';
    }
    emit(sibling_path(c.output, ".dat"), out, dat.str());
  }

  err << "residual " << format_sig9(res) << "\nsecond_order_residual " << format_sig9(res2) << '\n';
  return (res <= 1e-10 && res2 <= 1e-10) ? kOk : kVerificationFailure;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  require(c.fd_points >= 2000, "--fd-points must be >= 2000");
  require(c.x_max >= 32.0, "--x-max must be >= 32");
  VerifyOptions opt;
  opt.quick = c.quick;
  opt.inject_perturbation = c.inject_perturbation;
  opt.fd_points = c.fd_points;
  opt.x_max = c.x_max;
  bool all = true;
  for (const auto& r : run_verification(opt)) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "  (" << secs << ")\n";
    all = all && r.passed;
  }
  out << (all ? "all suites passed\n" : "verification FAILED\n");
  return all ? kOk : kVerificationFailure;
}

void add_physics_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--B", c.B, "magnetic parameter eB/2hbar (> 0)");
  cmd->add_option("--M", c.M, "mass parameter Mc/hbar (> 0)");
  cmd->add_option("--format", c.format, "csv or json");
  cmd->add_option("--output,-o", c.output, "output path (default stdout)");
  cmd->add_flag("--plot-data", c.plot_data, "also write a gnuplot-compatible .dat next to --output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Spin-1 DKP particle in a homogeneous magnetic field"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "energy levels of the three branches");
  add_physics_options(spectrum, c);
  spectrum->add_option("--k", c.k_values, "longitudinal momenta")->expected(1, -1);
  spectrum->add_option("--n-max", c.n_max, "largest radial quantum number");
  spectrum->add_option("--m", c.m_values, "magnetic quantum numbers")->expected(1, -1);
  spectrum->add_option("--m-min", c.m_min, "lowest m (when --m is absent)");
  spectrum->add_option("--m-max", c.m_max, "highest m (when --m is absent)");
  spectrum->add_option("--branch", c.branch, "SCALAR, PLUS_B, MINUS_B or all");

  auto* wave = app.add_subcommand("wavefunction", "ten-component radial solution");
  add_physics_options(wave, c);
  wave->add_option("--branch", c.branch, "SCALAR, PLUS_B or MINUS_B")->required();
  wave->add_option("--variant", c.variant, "diagonalization variant A or B");
  wave->add_option("--n", c.n, "radial quantum number");
  wave->add_option("--m", c.m, "magnetic quantum number");
  wave->add_option("--k", c.k, "longitudinal momentum");
  wave->add_option("--r-max", c.r_max, "largest sampled radius");
  wave->add_option("--points", c.points, "number of sample radii");
  wave->add_option("--json-output", c.json_output, "analytic JSON path (default: --output with .json)");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_flag("--quick", c.quick, "skip the finite-difference oracle");
  verify->add_flag("--inject-perturbation", c.inject_perturbation, "test hook: corrupt every state");
  verify->add_option("--fd-points", c.fd_points, "finite-difference grid points");
  verify->add_option("--x-max", c.x_max, "grid extent in x = B r^2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (wave->parsed()) return cmd_wavefunction(c, out, err);
    return cmd_verify(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const DegenerateError& e) {
    err << "degenerate parameters: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ReconstructionError& e) {
    err << "degenerate parameters: " << e.what() << '\n';
    return kDegenerate;
  }
}

}  // namespace dkp::cli
