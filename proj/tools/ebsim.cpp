// ebsim: command-line driver for the extended Boussinesq solver.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boussinesq/config.hpp"
#include "boussinesq/csv.hpp"
#include "boussinesq/dispersion.hpp"
#include "boussinesq/dispersive.hpp"
#include "boussinesq/scenario.hpp"
#include "boussinesq/splitting.hpp"

namespace fs = std::filesystem;
using namespace boussinesq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitSelfTest = 4;

fs::path output_dir(const std::string& flag) {
  fs::path dir = ".";
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv("BOUSSINESQ_OUTPUT_DIR"); env && *env) {
    dir = env;
  }
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

// A path to a config file, or the name of a built-in scenario.
ScenarioConfig resolve_config(const std::string& what) {
  if (fs::exists(what)) return load_config(what);
  for (const auto& name : scenario::builtin_names()) {
    if (name == what) return scenario::builtin_config(name);
  }
  throw ConfigError("'" + what + "' is neither a readable config file nor a built-in scenario");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long long n = std::strtoll(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || n <= 0) throw ConfigError("bad resolution list '" + text + "'");
    out.push_back(static_cast<std::size_t>(n));
  }
  return out;
}

dispersion::ErrorFunctional parse_functional(const std::string& name) {
  if (name == "sum_of_squares") return dispersion::ErrorFunctional::SumOfSquares;
  if (name == "weighted_sum") return dispersion::ErrorFunctional::WeightedSum;
  throw ConfigError("functional must be 'sum_of_squares' or 'weighted_sum'");
}

int cmd_simulate(const std::string& source, const std::string& outflag) {
  const ScenarioConfig cfg = resolve_config(source);
  const fs::path dir = output_dir(outflag);
  std::ofstream snaps = open_output(dir / (cfg.name + "_snapshots.csv"));
  std::ofstream diag_file = open_output(dir / (cfg.name + "_diagnostics.csv"));
  csv::Writer diag(diag_file, {"t", "mass", "max_abs_zeta", "max_abs_v"});
  const Grid grid = cfg.grid();
  const std::vector<double> x = grid.cell_centers();
  bool header = true;
  const scenario::ScenarioResult r = scenario::run_scenario(cfg, [&](const scenario::Snapshot& s) {
    csv::write_snapshot(snaps, s.t, x, s.cells.zeta, s.cells.v, header);
    header = false;
    diag.row({s.t, s.diagnostics.mass, s.diagnostics.max_abs_zeta, s.diagnostics.max_abs_v});
  });
  std::printf("%s: %zu snapshots written to %s\n", cfg.name.c_str(), r.snapshots.size(), dir.string().c_str());
  if (r.blew_up) {
    std::printf("blow-up at t = %.6g: %s\n", r.blowup_time, r.blowup_message.c_str());
    return cfg.expect_blowup ? kExitOk : kExitBlowUp;
  }
  std::printf("completed t = %.6g in %zu steps, mass %.17g\n", r.final_state.t, r.final_state.step_count,
              r.final_state.diagnostics.mass);
  return kExitOk;
}

int cmd_converge(const std::string& source, const std::string& sizes, double end_time, const std::string& outflag) {
  ScenarioConfig cfg = resolve_config(source);
  if (end_time > 0.0) cfg.end_time = end_time;
  cfg.output_times.clear();
  const std::vector<std::size_t> ns = parse_sizes(sizes);
  const scenario::ConvergenceReport rep = scenario::run_convergence(cfg, ns);
  const fs::path dir = output_dir(outflag);
  std::ofstream file = open_output(dir / (cfg.name + "_convergence.csv"));
  csv::Writer w(file, {"n", "err_zeta", "err_v"});
  for (const auto& row : rep.rows) {
    w.row({static_cast<double>(row.n), row.err_zeta, row.err_v});
    std::printf("N = %6zu  E(zeta) = %.3e  E(v) = %.3e\n", row.n, row.err_zeta, row.err_v);
  }
  std::printf("slope zeta %.3f, slope v %.3f%s\n", rep.slope_zeta, rep.slope_v,
              rep.monotone ? "" : "  (errors not monotone)");
  return kExitOk;
}

int cmd_dispersion(const std::string& model_name, double alpha, double kmax, int samples, const std::string& scan,
                   const std::string& functional, const std::string& outflag) {
  dispersion::DispersionModel m;
  m.relation = dispersion::parse_relation(model_name);
  m.params.alpha = alpha;
  const fs::path dir = output_dir(outflag);
  {
    std::ofstream file = open_output(dir / ("dispersion_" + model_name + ".csv"));
    csv::Writer w(file, {"k", "Cp_model", "Cg_model", "Cp_stokes", "Cg_stokes", "ratio_p", "ratio_g"});
    for (const auto& r : scenario::dispersion_report(m, kmax, samples)) {
      w.row({r.k, r.cp_model, r.cg_model, r.cp_stokes, r.cg_stokes, r.ratio_p, r.ratio_g});
    }
  }
  if (!scan.empty()) {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    if (std::sscanf(scan.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2 || !(hi > lo)) {
      throw ConfigError("--alpha-scan expects lo:hi:samples");
    }
    std::ofstream file = open_output(dir / ("alpha_scan_" + model_name + ".csv"));
    csv::Writer w(file, {"alpha", "error"});
    for (const auto& p : dispersion::scan_alpha(m, kmax, lo, hi, n, parse_functional(functional))) {
      w.row({p.alpha, p.error});
    }
  }
  std::printf("dispersion curves written to %s\n", dir.string().c_str());
  return kExitOk;
}

int cmd_optimize(const std::string& model_name, double kmax, const std::string& functional) {
  dispersion::DispersionModel m;
  m.relation = dispersion::parse_relation(model_name);
  dispersion::OptimizeOptions opts;
  opts.functional = parse_functional(functional);
  const dispersion::AlphaOptimum best = dispersion::optimize_alpha(m, kmax, opts);
  std::printf("alpha* = %.6f  error = %.6e%s\n", best.alpha, best.error,
              best.at_bracket_edge ? "  (at bracket edge)" : "");
  return kExitOk;
}

int cmd_stability(const std::string& variant_name, double alpha, double kmax, int samples) {
  const ModelVariant v = parse_variant(variant_name);
  csv::Writer w(std::cout, {"k", "zeta_bar_max"});
  for (int i = 1; i <= samples; ++i) {
    const double k = kmax * i / samples;
    w.row({k, dispersion::stability_bound(v, k, alpha)});
  }
  return kExitOk;
}

int cmd_stability_demo(const std::string& source) {
  const ScenarioConfig cfg = resolve_config(source.empty() ? "stability_demo" : source);
  bool unexpected = false;
  for (const auto& o : scenario::stability_demo(cfg)) {
    const bool expected = o.variant == ModelVariant::FifthOnlyFactorized;
    std::printf("%-13s %s  max amplitude %.4g", std::string(to_string(o.variant)).c_str(),
                o.blew_up ? "blew up " : "bounded ", o.max_amplitude);
    if (o.blew_up) std::printf("  at t = %.4g", o.blowup_time);
    std::printf("\n");
    if (o.blew_up && !expected) unexpected = true;
  }
  return unexpected ? kExitBlowUp : kExitOk;
}

int cmd_export(const std::string& name) {
  write_config(std::cout, scenario::builtin_config(name));
  return kExitOk;
}

// Fast checks of the headline numbers; exit code 4 when any fails.
int cmd_selftest() {
  int failures = 0;
  auto check = [&](const char* what, bool ok, double value) {
    std::printf("[%s] %s (%.10g)\n", ok ? "PASS" : "FAIL", what, value);
    if (!ok) ++failures;
  };
  dispersion::DispersionModel eb;
  eb.relation = dispersion::Relation::EbUnfactorized;
  const double a1 = dispersion::optimize_alpha(eb, 1.0).alpha;
  check("alpha* for eb_unfactorized, K = 1 near 0.8351", std::abs(a1 - 0.8351) <= 5e-3, a1);
  eb.relation = dispersion::Relation::EbFactorized;
  const double a10 = dispersion::optimize_alpha(eb, 10.0).alpha;
  check("alpha* for eb_factorized, K = 10 near 1.0555", std::abs(a10 - 1.0555) <= 2e-2, a10);
  eb.params.alpha = 1.0;
  const double c6 = dispersion::taylor_coefficients(eb).c6;
  check("k^6 coefficient equals 2/15 at alpha = 1", std::abs(c6 - 2.0 / 15.0) <= 1e-10, c6);

  const Grid grid(-2.0, 2.0, 64);
  const splitting::StrangSplitting scheme(grid, PhysParams{0.5, 1.0, 1.0, 1.0}, ModelVariant::FactorizedAll);
  splitting::RunState run = scheme.initial_state(CellState(std::vector<double>(64, 0.3), std::vector<double>(64, 0.0)));
  for (int i = 0; i < 20; ++i) scheme.step(run, 0.01);
  double drift = 0.0;
  for (std::size_t i = 0; i < 64; ++i) drift = std::max({drift, std::abs(run.cells.zeta[i] - 0.3), std::abs(run.cells.v[i])});
  check("steady state preserved", drift <= 1e-13, drift);

  std::printf("%d check(s) failed\n", failures);
  return failures ? kExitSelfTest : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Boussinesq solver: scenarios, convergence studies and dispersion analysis"};
  app.require_subcommand(1);
  std::string outdir;
  app.add_option("--output-dir", outdir, "Output directory (default: $BOUSSINESQ_OUTPUT_DIR or .)");

  std::string source;
  auto* sim = app.add_subcommand("simulate", "Run a scenario from a config file or built-in name");
  sim->add_option("config", source, "Config file or built-in scenario")->required();

  std::string sizes = "400,800,1600,3200,6400";
  double end_time = 0.0;
  auto* conv = app.add_subcommand("converge", "Grid-refinement study against the analytic solitary wave");
  conv->add_option("config", source, "Config file or built-in scenario")->required();
  conv->add_option("--n", sizes, "Comma-separated cell counts");
  conv->add_option("--end-time", end_time, "Override the final time");

  std::string model = "eb_factorized";
  double alpha = 1.0;
  double kmax = 10.0;
  int samples = 200;
  std::string scan;
  std::string functional = "sum_of_squares";
  auto* disp = app.add_subcommand("dispersion", "Phase/group velocity curves against full Euler");
  disp->add_option("--model", model, "eb_unfactorized | eb_factorized | full_euler");
  disp->add_option("--alpha", alpha, "Dispersion parameter");
  disp->add_option("--kmax", kmax, "Largest wavenumber");
  disp->add_option("--samples", samples, "Number of wavenumbers");
  disp->add_option("--alpha-scan", scan, "Also write the error-vs-alpha curve, lo:hi:samples");
  disp->add_option("--functional", functional, "sum_of_squares | weighted_sum");

  auto* opt = app.add_subcommand("optimize-alpha", "Minimize the velocity error over alpha");
  opt->add_option("--model", model, "eb_unfactorized | eb_factorized");
  opt->add_option("--kmax", kmax, "Upper end of the wavenumber range");
  opt->add_option("--functional", functional, "sum_of_squares | weighted_sum");

  std::string variant = "factorized";
  auto* stab = app.add_subcommand("stability", "Largest stable background elevation versus k (CSV on stdout)");
  stab->add_option("--variant", variant, "factorized | unfactorized | fifth_only");
  stab->add_option("--alpha", alpha, "Dispersion parameter");
  stab->add_option("--kmax", kmax, "Largest wavenumber");
  stab->add_option("--samples", samples, "Number of wavenumbers");

  auto* demo = app.add_subcommand("stability-demo", "Run the high-frequency heap with every model variant");
  demo->add_option("config", source, "Config file or built-in scenario (default stability_demo)");

  std::string name;
  auto* exp = app.add_subcommand("export-config", "Print a built-in scenario as a config file");
  exp->add_option("name", name, "Built-in scenario")->required();

  auto* list = app.add_subcommand("list", "List built-in scenarios");
  auto* self = app.add_subcommand("selftest", "Quick consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(source, outdir);
    if (conv->parsed()) return cmd_converge(source, sizes, end_time, outdir);
    if (disp->parsed()) return cmd_dispersion(model, alpha, kmax, samples, scan, functional, outdir);
    if (opt->parsed()) return cmd_optimize(model, kmax, functional);
    if (stab->parsed()) return cmd_stability(variant, alpha, kmax, samples);
    if (demo->parsed()) return cmd_stability_demo(source);
    if (exp->parsed()) return cmd_export(name);
    if (list->parsed()) {
      for (const auto& n : scenario::builtin_names()) std::printf("%s\n", n.c_str());
      return kExitOk;
    }
    if (self->parsed()) return cmd_selftest();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitBlowUp;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
