#include "boussinesq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boussinesq/analytic.hpp"

namespace boussinesq::scenario {

namespace {

ScenarioConfig solitary() {
  ScenarioConfig c;
  c.name = "solitary";
  c.x_min = 0.0;
  c.x_max = 100.0;
  c.n_cells = 1600;
  c.params = {0.01, 1.0, 1.0, 1.0};
  c.initial = InitialKind::Solitary;
  c.amplitude = 0.2;
  c.x0 = 20.0;
  c.direction = 1;
  c.end_time = 70.0;
  c.output_times = {0.0, 10.0, 30.0, 50.0, 70.0};
  return c;
}

ScenarioConfig solitary_convergence() {
  ScenarioConfig c = solitary();
  c.name = "solitary_convergence";
  c.n_cells = 400;
  c.end_time = 1.0;
  c.output_times = {1.0};
  return c;
}

ScenarioConfig head_on() {
  ScenarioConfig c;
  c.name = "head_on";
  c.x_min = -100.0;
  c.x_max = 100.0;
  c.n_cells = 1200;
  c.params = {0.1, 1.0, 1.0, 1.0};
  c.initial = InitialKind::TwoSolitary;
  c.amplitude = 0.4;
  c.x0 = -50.0;
  c.direction = 1;
  c.amplitude2 = 0.2;
  c.x0_2 = 50.0;
  c.direction2 = -1;
  c.end_time = 70.0;
  c.output_times = {0.0, 43.0, 46.0, 49.0, 53.0, 55.0, 58.0, 60.0, 70.0};
  return c;
}

ScenarioConfig heap(const std::string& name, double eps, double alpha, double width) {
  ScenarioConfig c;
  c.name = name;
  c.x_min = -2.0;
  c.x_max = 2.0;
  c.n_cells = 512;
  c.params = {eps, alpha, 1.0, 1.0};
  c.initial = InitialKind::Heap;
  c.heap_amplitude = 0.7;
  c.heap_width = width;
  c.end_time = 3.0;
  c.output_times = {0.0, 1.0, 2.0, 3.0};
  return c;
}

ScenarioConfig dam_break() {
  ScenarioConfig c;
  c.name = "dam_break";
  c.units = Units::SI;
  c.x_min = -700.0;
  c.x_max = 700.0;
  c.n_cells = 2800;
  c.params = {1.0, 1.0, 9.81, 1.0};
  c.initial = InitialKind::DamBreak;
  c.dam_amplitude = 0.2091;
  c.end_time = 65.0;
  c.output_times = {0.0, 20.0, 30.0, 65.0};
  return c;
}

ScenarioConfig stability() {
  ScenarioConfig c = heap("stability_demo", 1.0, 1.0, 80.0);
  c.variant = ModelVariant::FifthOnlyFactorized;
  c.heap_amplitude = 0.6;
  c.output_times = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  c.blowup_threshold = 10.0;
  c.expect_blowup = true;
  return c;
}

analytic::SolitaryWaveSpec first_wave(const ScenarioConfig& c) {
  return {c.amplitude, c.params.epsilon, c.x0, c.direction};
}

analytic::SolitaryWaveSpec second_wave(const ScenarioConfig& c) {
  return {c.amplitude2, c.params.epsilon, c.x0_2, c.direction2};
}

bool is_solitary(const ScenarioConfig& c) {
  return c.initial == InitialKind::Solitary || c.initial == InitialKind::TwoSolitary;
}

analytic::WavePoint wave_value(const ScenarioConfig& c, const analytic::SolitaryWaveSpec& s, double t, double x) {
  if (!c.corrector) return analytic::base_wave(s, t, x);
  return analytic::corrected_solution(s, analytic::default_correction(s, c.corrector_center), t, x);
}

// zeta and v of the (sum of) solitary waves at (t, x).
analytic::WavePoint solitary_value(const ScenarioConfig& c, double t, double x) {
  analytic::WavePoint w = wave_value(c, first_wave(c), t, x);
  if (c.initial == InitialKind::TwoSolitary) {
    const analytic::WavePoint u = wave_value(c, second_wave(c), t, x);
    w.zeta += u.zeta;
    w.v += u.v;
  }
  return w;
}

CellState solitary_cells(const ScenarioConfig& c, const Grid& grid, double t) {
  return CellState(cell_averages(grid, [&](double x) { return solitary_value(c, t, x).zeta; }),
                   cell_averages(grid, [&](double x) { return solitary_value(c, t, x).v; }));
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"solitary", "solitary_convergence", "head_on", "heap_hf",
                                                 "heap_hf_optimized", "heap_lf", "dam_break", "stability_demo"};
  return names;
}

ScenarioConfig builtin_config(const std::string& name) {
  if (name == "solitary") return solitary();
  if (name == "solitary_convergence") return solitary_convergence();
  if (name == "head_on") return head_on();
  if (name == "heap_hf") return heap("heap_hf", 0.1, 1.0, 80.0);
  if (name == "heap_hf_optimized") return heap("heap_hf_optimized", 0.1, 1.0555, 80.0);
  if (name == "heap_lf") return heap("heap_lf", 0.5, 1.0, 0.4);
  if (name == "dam_break") return dam_break();
  if (name == "stability_demo") return stability();
  throw ConfigError("unknown built-in scenario '" + name + "'");
}

CellState initial_cells(const ScenarioConfig& c) {
  c.validate();
  const Grid grid = c.grid();
  const std::size_t n = grid.size();
  switch (c.initial) {
    case InitialKind::Solitary:
    case InitialKind::TwoSolitary:
      return solitary_cells(c, grid, 0.0);
    case InitialKind::Heap:
      return CellState(cell_averages(grid,
                                     [&](double x) {
                                       return c.background + c.heap_amplitude * std::exp(-c.heap_width * x * x);
                                     }),
                       std::vector<double>(n, 0.0));
    case InitialKind::DamBreak:
      return CellState(
          cell_averages(grid, [&](double x) { return c.background + analytic::dam_break_profile(c.dam_amplitude, x); }),
          std::vector<double>(n, 0.0));
    case InitialKind::Flat:
      return CellState(std::vector<double>(n, c.background), std::vector<double>(n, 0.0));
  }
  throw ConfigError("unhandled initial condition");
}

std::optional<CellState> reference_cells(const ScenarioConfig& c, const Grid& grid, double t) {
  if (!is_solitary(c)) return std::nullopt;
  return solitary_cells(c, grid, t);
}

ScenarioResult run_scenario(const ScenarioConfig& config, const std::function<void(const Snapshot&)>& on_snapshot) {
  config.validate();
  const Grid grid = config.grid();
  const splitting::StrangSplitting scheme(grid, config.params, config.variant, config.step_options());

  ScenarioResult result;
  result.x = grid.cell_centers();
  splitting::RunState run = scheme.initial_state(initial_cells(config));
  result.max_amplitude = std::max(run.diagnostics.max_abs_zeta, run.diagnostics.max_abs_v);

  splitting::RunOptions opts = config.run_options();
  opts.on_step = [&](const splitting::RunState& r) {
    result.max_amplitude = std::max({result.max_amplitude, r.diagnostics.max_abs_zeta, r.diagnostics.max_abs_v});
  };
  auto record = [&](const splitting::RunState& r) {
    Snapshot s{r.t, r.cells, r.diagnostics};
    if (on_snapshot) on_snapshot(s);
    result.snapshots.push_back(std::move(s));
  };
  try {
    result.final_state = splitting::run_until(run, scheme, opts, record);
  } catch (const splitting::InstabilityError& e) {
    result.blew_up = true;
    result.blowup_time = e.time();
    result.blowup_message = e.what();
    result.max_amplitude = std::max(result.max_amplitude, e.amplitude());
  } catch (const NumericalError& e) {
    // choose_dt on a state that just lost hyperbolicity.
    result.blew_up = true;
    result.blowup_time = result.snapshots.empty() ? 0.0 : result.snapshots.back().t;
    result.blowup_message = e.what();
    result.max_amplitude = std::numeric_limits<double>::infinity();
  }
  return result;
}

double convergence_slope(std::span<const double> dx, std::span<const double> err) {
  if (dx.size() != err.size() || dx.size() < 2) throw ConfigError("slope needs at least two matching samples");
  double mx = 0.0, my = 0.0;
  const auto n = static_cast<double>(dx.size());
  for (std::size_t i = 0; i < dx.size(); ++i) {
    if (!(dx[i] > 0.0 && err[i] > 0.0)) throw NumericalError("slope needs positive spacings and errors");
    mx += std::log(dx[i]);
    my += std::log(err[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < dx.size(); ++i) {
    const double a = std::log(dx[i]) - mx;
    sxy += a * (std::log(err[i]) - my);
    sxx += a * a;
  }
  return sxy / sxx;
}

ConvergenceReport run_convergence(const ScenarioConfig& base, std::span<const std::size_t> n_list) {
  if (!is_solitary(base)) throw ConfigError("convergence study needs solitary-wave initial data");
  if (n_list.size() < 2) throw ConfigError("convergence study needs at least two resolutions");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw ConfigError("resolutions must be strictly increasing");
  }
  ConvergenceReport report;
  std::vector<double> dx, ez, ev;
  for (std::size_t n : n_list) {
    ScenarioConfig c = base;
    c.n_cells = n;
    c.output_times.clear();
    const ScenarioResult r = run_scenario(c);
    if (r.blew_up) throw NumericalError("convergence run at N = " + std::to_string(n) + " failed: " + r.blowup_message);
    const Grid grid = c.grid();
    const CellState ref = *reference_cells(c, grid, c.end_time);
    ConvergenceRow row{n, relative_l2_error(r.final_state.cells.zeta, ref.zeta),
                       relative_l2_error(r.final_state.cells.v, ref.v)};
    if (!report.rows.empty()) {
      const ConvergenceRow& prev = report.rows.back();
      if (!(row.err_zeta < prev.err_zeta && row.err_v < prev.err_v)) report.monotone = false;
    }
    report.rows.push_back(row);
    dx.push_back(grid.dx());
    ez.push_back(row.err_zeta);
    ev.push_back(row.err_v);
  }
  report.slope_zeta = convergence_slope(dx, ez);
  report.slope_v = convergence_slope(dx, ev);
  return report;
}

std::vector<DispersionRow> dispersion_report(const dispersion::DispersionModel& model, double k_max, int samples) {
  if (!(k_max > 0.0)) throw ConfigError("k_max must be positive");
  if (samples < 1) throw ConfigError("samples must be positive");
  dispersion::DispersionModel stokes = model;
  stokes.relation = dispersion::Relation::FullEuler;
  stokes.background = {};
  std::vector<DispersionRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i <= samples; ++i) {
    const double k = k_max * i / samples;
    const dispersion::Velocities ref = dispersion::velocities(stokes, k);
    dispersion::Velocities m{nan, nan};
    try {
      m = dispersion::velocities(model, k);
    } catch (const NumericalError&) {
      // complex frequency: no real velocities at this k
    }
    rows.push_back({k, m.phase, m.group, ref.phase, ref.group, m.phase / ref.phase, m.group / ref.group});
  }
  return rows;
}

Crest locate_crest(std::span<const double> x, std::span<const double> zeta, double lo, double hi) {
  const std::size_t n = zeta.size();
  if (x.size() != n || n < 3) throw ConfigError("crest search needs matching arrays of length >= 3");
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < lo || x[i] > hi) continue;
    if (best == n || zeta[i] > zeta[best]) best = i;
  }
  if (best == n) throw ConfigError("crest search window contains no cells");
  const double zm = zeta[(best + n - 1) % n];
  const double z0 = zeta[best];
  const double zp = zeta[(best + 1) % n];
  const double curv = zm - 2.0 * z0 + zp;
  const double dx = x[1] - x[0];
  Crest c{x[best], z0, best};
  if (curv < 0.0) {
    const double s = 0.5 * (zm - zp) / curv;  // offset in cells, |s| <= 1/2 at a strict maximum
    c.position = x[best] + s * dx;
    c.amplitude = z0 - 0.25 * (zm - zp) * s;
  }
  return c;
}

std::vector<StabilityOutcome> stability_demo(const ScenarioConfig& base) {
  std::vector<StabilityOutcome> out;
  for (ModelVariant v : {ModelVariant::FactorizedAll, ModelVariant::Unfactorized, ModelVariant::FifthOnlyFactorized}) {
    ScenarioConfig c = base;
    c.variant = v;
    if (v == ModelVariant::FifthOnlyFactorized) c.params.alpha = 1.0;
    const ScenarioResult r = run_scenario(c);
    out.push_back({v, r.blew_up, r.blowup_time, r.max_amplitude});
  }
  return out;
}

}  // namespace boussinesq::scenario
