// magbound: command-line front end.
//
//   magbound solve    --lambda L --cutoff N --method exact|log|asymptotic
//   magbound field    [--grid NX,NY] [--extent XMIN,XMAX,YMIN,YMAX] [--format csv|json]
//   magbound vortices --centers centers.json
//   magbound compare  --e0 EV --b KG [--r0 CM]
//   magbound verify   [--verbose]
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 solver failure, 4 I/O failure.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "magbound/magbound.hpp"

namespace {

using namespace magbound;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kSolver = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string units = "natural";
  std::string out;
  std::string format = "csv";
  std::vector<int> grid{201, 201};
  std::vector<double> extent{-4.0, 4.0, -4.0, 4.0};
  double coupling = 4.0 * std::numbers::pi;
  double field_kg = 10.0;
  double mass_ratio = 1.0;

  std::int64_t cutoff = 1000000;
  std::string method = "log";

  std::string centers;

  double e0_ev = 1.0;
  double b_kg = 1.0;
  double r0_cm = 0.0;  // 0: choose 0.05 of the smaller localization length

  bool verbose = false;
  double perturb_j0 = 1.0;
};

PhysicalParams make_params(const Settings& s) {
  if (s.units == "natural") return PhysicalParams::natural(s.coupling, s.mass_ratio);
  if (s.units == "gaussian") return PhysicalParams::gaussian(s.field_kg, s.coupling, s.mass_ratio);
  throw ValidationError("units", "expected natural or gaussian");
}

Extent make_extent(const Settings& s, double length_unit) {
  if (s.extent.size() != 4) throw ValidationError("extent", "expected XMIN,XMAX,YMIN,YMAX");
  for (double v : s.extent) {
    if (!std::isfinite(v)) throw ValidationError("extent", "must be finite");
  }
  return {s.extent[0] * length_unit, s.extent[1] * length_unit, s.extent[2] * length_unit,
          s.extent[3] * length_unit};
}

void check_grid(const Settings& s) {
  if (s.grid.size() != 2 || s.grid[0] < 2 || s.grid[1] < 2) {
    throw ValidationError("grid", "expected NX,NY with both at least 2");
  }
}

bool json_output(const Settings& s) { return s.format == "json"; }

// Writes to --out, or stdout when no path is given.
void emit(const Settings& s, const std::string& payload) {
  if (s.out.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream f(s.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + s.out + "' for writing");
  f << payload;
  f.close();
  if (!f) throw IoError("failed writing '" + s.out + "'");
}

std::string text_report(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << " = " << v << '\n';
  return os.str();
}

int cmd_solve(const Settings& s) {
  const SolverMethod method = parse_solver_method(s.method);
  const PhysicalParams params = make_params(s);
  const DerivedScales sc = derive_scales(params);
  const BoundStateSolution sol = solve_bound_state(method, s.coupling, s.cutoff);
  const double residual = method_residual(sol);
  const double truncated = truncated_residual(s.coupling, sol.b, sol.cutoff_N);

  if (json_output(s)) {
    nlohmann::json j = {{"lambda", json_number(s.coupling)},
                        {"cutoff", sol.cutoff_N},
                        {"method", std::string(to_string(sol.method))},
                        {"b", json_number(sol.b)},
                        {"energy_hw", json_number(sol.energy)},
                        {"binding_hw", json_number(sol.binding)},
                        {"hbar_omega", json_number(sc.hbar_omega)},
                        {"c_norm", json_number(sol.c_norm)},
                        {"residual", json_number(residual)},
                        {"truncated_residual", json_number(truncated)},
                        {"units", std::string(to_string(sc.units))}};
    emit(s, j.dump(2) + "\n");
  } else {
    emit(s, text_report({{"lambda", format_number(s.coupling)},
                         {"cutoff", std::to_string(sol.cutoff_N)},
                         {"method", std::string(to_string(sol.method))},
                         {"b", format_number(sol.b)},
                         {"energy_hw", format_number(sol.energy)},
                         {"binding_hw", format_number(sol.binding)},
                         {"hbar_omega", format_number(sc.hbar_omega)},
                         {"c_norm", format_number(sol.c_norm)},
                         {"residual", format_number(residual)},
                         {"truncated_residual", format_number(truncated)},
                         {"units", std::string(to_string(sc.units))}}));
  }
  return kOk;
}

int cmd_field(const Settings& s) {
  check_grid(s);
  const DerivedScales sc = derive_scales(make_params(s));
  const auto rows = sample_ground_state(make_extent(s, sc.a), s.grid[0], s.grid[1], sc);
  std::ostringstream os;
  if (json_output(s)) {
    os << to_json(rows).dump() << '\n';
  } else {
    write_csv(os, rows);
  }
  emit(s, os.str());
  return kOk;
}

int cmd_vortices(const Settings& s) {
  check_grid(s);
  if (s.centers.empty()) throw ValidationError("centers", "a centres file is required (--centers)");
  const DerivedScales sc = derive_scales(make_params(s));
  std::ifstream in(s.centers);
  if (!in) throw IoError("cannot read centres file '" + s.centers + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("centers", std::string("malformed JSON: ") + e.what());
  }
  const VortexConfig cfg = VortexConfig::make(parse_centers(doc, sc.a), sc.a);
  const VortexSampling res = sample_vortices(cfg, make_extent(s, sc.a), s.grid[0], s.grid[1]);
  std::ostringstream os;
  if (json_output(s)) {
    os << to_json(res.rows).dump() << '\n';
  } else {
    write_csv(os, res.rows);
  }
  emit(s, os.str());
  std::cerr << "vortices: " << res.rows.size() << " samples, " << cfg.centers.size() << " centres, "
            << res.pole_samples << " pole samples written as NaN\n";
  return kOk;
}

int cmd_compare(const Settings& s) {
  detail::require_positive(s.e0_ev, "e0");
  detail::require_positive(s.b_kg, "b");
  const DerivedScales sc = derive_scales(PhysicalParams::gaussian(s.b_kg, 1.0));
  const double l0 = localization_length(s.e0_ev * cgs::erg_per_ev, cgs::hbar, cgs::electron_mass);
  const double exact = localization_ratio_exact(s.e0_ev, s.b_kg);
  const double rounded = localization_ratio_rounded(s.e0_ev, s.b_kg);
  const double deviation = (exact - rounded) / rounded * 100.0;
  const double r0 = s.r0_cm > 0.0 ? s.r0_cm : 0.05 * std::min(sc.a, l0);
  if (s.r0_cm < 0.0) throw ValidationError("r0", "must be positive");
  const double dwell_b = dwell_ratio(r0, sc.a, true);
  const double dwell_0 = dwell_ratio(r0, l0, false);

  if (json_output(s)) {
    nlohmann::json j = {{"e0_ev", json_number(s.e0_ev)},
                        {"b_kg", json_number(s.b_kg)},
                        {"a_cm", json_number(sc.a)},
                        {"l0_cm", json_number(l0)},
                        {"ratio_exact", json_number(exact)},
                        {"ratio_formula", json_number(rounded)},
                        {"deviation_pct", json_number(deviation)},
                        {"r0_cm", json_number(r0)},
                        {"dwell_with_field", json_number(dwell_b)},
                        {"dwell_without_field", json_number(dwell_0)}};
    emit(s, j.dump(2) + "\n");
  } else {
    emit(s, text_report({{"e0_ev", format_number(s.e0_ev)},
                         {"b_kg", format_number(s.b_kg)},
                         {"a_cm", format_number(sc.a)},
                         {"l0_cm", format_number(l0)},
                         {"ratio_exact", format_number(exact)},
                         {"ratio_formula", format_number(rounded)},
                         {"deviation_pct", format_number(deviation)},
                         {"r0_cm", format_number(r0)},
                         {"dwell_with_field", format_number(dwell_b)},
                         {"dwell_without_field", format_number(dwell_0)}}));
  }
  return kOk;
}

int cmd_verify(const Settings& s) {
  VerifyOptions opt;
  opt.perturb_j0 = s.perturb_j0;
  const auto results = run_verification(opt);
  const bool color = std::getenv("NO_COLOR") == nullptr && s.out.empty() && isatty(STDOUT_FILENO);
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";

  std::ostringstream os;
  int passed = 0;
  for (const auto& c : results) {
    passed += c.passed;
    os << (c.passed ? green : red) << (c.passed ? "[PASS] " : "[FAIL] ") << reset << c.name
       << ": measured " << format_number(c.measured);
    if (s.verbose) {
      if (c.relative) {
        os << " (expected " << format_number(c.target) << " within " << format_number(c.tolerance * 100.0)
           << "%)";
      } else {
        os << " (tolerance " << format_number(c.tolerance) << ")";
      }
    }
    os << '\n';
  }
  os << passed << "/" << results.size() << " checks passed\n";
  emit(s, os.str());
  return all_passed(results) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Bound electron states in a magnetic field plus a delta potential"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a config file (TOML/INI; [section] per subcommand)");
  bool show_config = false;
  app.add_flag("--show-config", show_config, "Print the effective configuration with defaults and exit");

  app.add_option("--units", s.units, "Unit system")
      ->check(CLI::IsMember({"natural", "gaussian"}))
      ->capture_default_str();
  app.add_option("--out", s.out, "Output path (default: stdout)");
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--grid", s.grid, "Grid points NX,NY")->delimiter(',')->expected(2)->capture_default_str();
  app.add_option("--extent", s.extent, "XMIN,XMAX,YMIN,YMAX in units of the magnetic length")
      ->delimiter(',')
      ->expected(4)
      ->capture_default_str();
  // Full precision so that --show-config output reproduces 4 pi exactly.
  char lambda_default[32];
  std::snprintf(lambda_default, sizeof lambda_default, "%.17g", s.coupling);
  app.add_option("--lambda", s.coupling, "Dimensionless coupling lambda > 0")->default_str(lambda_default);
  app.add_option("--field-kg", s.field_kg, "Magnetic field in kilogauss (gaussian units)")->capture_default_str();
  app.add_option("--mass-ratio", s.mass_ratio, "Effective mass over free-electron mass")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Solve the bound-state energy condition");
  solve->add_option("--cutoff", s.cutoff, "Landau-level cutoff N")->capture_default_str();
  solve->add_option("--method", s.method, "exact | log | asymptotic")->capture_default_str();

  app.add_subcommand("field", "Sample the ground state, its current and curl on a grid");

  auto* vortices = app.add_subcommand("vortices", "Sample a superposition of point vortices");
  vortices->add_option("--centers", s.centers, "JSON array of {x, y, intensity}; x, y in units of a");

  auto* compare = app.add_subcommand("compare", "Zero-field comparison: localization ratio and dwell times");
  compare->add_option("--e0", s.e0_ev, "Zero-field binding energy |E0| in eV")->capture_default_str();
  compare->add_option("--b", s.b_kg, "Magnetic field in kG")->capture_default_str();
  compare->add_option("--r0", s.r0_cm, "Well radius in cm (default: 0.05 min(a, l0))");

  auto* verify = app.add_subcommand("verify", "Run the numerical self-verification suite");
  verify->add_flag("--verbose", s.verbose, "Print the tolerance next to each measurement");
  verify->add_option("--perturb-j0", s.perturb_j0)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::RequiredError& e) {
    if (show_config) {
      std::cout << app.config_to_str(true, true);
      return kOk;
    }
    app.exit(e);
    return kInvalid;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  if (show_config) {
    std::cout << app.config_to_str(true, true);
    return kOk;
  }

  try {
    if (solve->parsed()) return cmd_solve(s);
    if (app.got_subcommand("field")) return cmd_field(s);
    if (vortices->parsed()) return cmd_vortices(s);
    if (compare->parsed()) return cmd_compare(s);
    if (verify->parsed()) return cmd_verify(s);
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kInvalid;
}
