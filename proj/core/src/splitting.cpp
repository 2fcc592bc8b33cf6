#include "boussinesq/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boussinesq::splitting {

ConversionOperator::ConversionOperator(std::size_t n, Bias bias)
    : n_(n), bias_(bias), forward_(forward_stencil(bias)) {
  if (n < 5) throw ConfigError("conversion needs at least 5 cells");
  inverse_ = CyclicBandedSolver(forward_, n);
}

PeriodicStencil ConversionOperator::forward_stencil(Bias bias) {
  std::vector<double> c{1.0 / 30.0, -13.0 / 60.0, 47.0 / 60.0, 9.0 / 20.0, -1.0 / 20.0};
  if (bias == Bias::Right) std::reverse(c.begin(), c.end());
  return PeriodicStencil(std::move(c));
}

std::vector<double> ConversionOperator::to_nodal(std::span<const double> averages) const {
  if (averages.size() != n_) throw ConfigError("conversion: size mismatch");
  return forward_.apply(averages);
}

std::vector<double> ConversionOperator::to_cells(std::span<const double> nodal) const {
  if (nodal.size() != n_) throw ConfigError("conversion: size mismatch");
  return inverse_.solve(nodal);
}

NodalState cell_to_nodal(const CellState& state, const ConversionOperator& conv) {
  return NodalState(conv.to_nodal(state.zeta), conv.to_nodal(state.v));
}

CellState nodal_to_cell(const NodalState& state, const ConversionOperator& conv) {
  return CellState(conv.to_cells(state.zeta), conv.to_cells(state.v));
}

double choose_dt(const CellState& state, const PhysParams& params, double dx, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(dx > 0.0)) throw ConfigError("dx must be positive");
  double smax = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double h = params.water_column(state.zeta[i]);
    if (!(h > 0.0)) throw HyperbolicityError("nonpositive water column in cell " + std::to_string(i));
    smax = std::max(smax, std::abs(params.epsilon * state.v[i]) + std::sqrt(params.gravity * h));
  }
  return cfl * dx / smax;
}

std::string_view to_string(ConversionScheme scheme) {
  return scheme == ConversionScheme::Symmetrized ? "symmetrized" : "left";
}

ConversionScheme parse_conversion(std::string_view name) {
  if (name == "symmetrized") return ConversionScheme::Symmetrized;
  if (name == "left") return ConversionScheme::LeftOnly;
  throw ConfigError("unknown conversion scheme '" + std::string(name) + "'");
}

Diagnostics diagnose(const CellState& cells, double dx) {
  Diagnostics d;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    d.mass += cells.zeta[i];
    d.max_abs_zeta = std::max(d.max_abs_zeta, std::abs(cells.zeta[i]));
    d.max_abs_v = std::max(d.max_abs_v, std::abs(cells.v[i]));
    if (!std::isfinite(cells.zeta[i]) || !std::isfinite(cells.v[i])) {
      d.max_abs_zeta = d.max_abs_v = std::numeric_limits<double>::infinity();
    }
  }
  d.mass *= dx;
  return d;
}

StrangSplitting::StrangSplitting(const Grid& grid, const PhysParams& params, ModelVariant variant,
                                 StepOptions options)
    : grid_(grid),
      params_(params),
      variant_(variant),
      options_(options),
      conv_(grid.size(), Bias::Left),
      mirror_conv_(grid.size(), Bias::Right),
      ops_(dispersive::build_operators(grid, params, variant)) {
  if (options_.n_disp < 1) throw ConfigError("n_disp must be at least 1");
  if (!(options_.blowup_threshold > 0.0)) throw ConfigError("blow-up threshold must be positive");
}

RunState StrangSplitting::initial_state(CellState cells) const {
  if (cells.size() != grid_.size()) throw ConfigError("initial state does not match grid size");
  RunState run;
  run.cells = std::move(cells);
  run.diagnostics = diagnose(run.cells, grid_.dx());
  return run;
}

std::vector<double> StrangSplitting::dispersive_velocity(const CellState& cells, double dt,
                                                         const ConversionOperator& conv) const {
  NodalState nodal = cell_to_nodal(cells, conv);
  const double sub = dt / options_.n_disp;
  for (int s = 0; s < options_.n_disp; ++s) nodal = dispersive::rk4_fd_step(nodal, sub, ops_);
  return conv.to_cells(nodal.v);
}

CellState StrangSplitting::dispersive_part(const CellState& cells, double dt) const {
  std::vector<double> v = dispersive_velocity(cells, dt, conv_);
  if (options_.conversion == ConversionScheme::Symmetrized) {
    const std::vector<double> w = dispersive_velocity(cells, dt, mirror_conv_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5 * (v[i] + w[i]);
  }
  return CellState(cells.zeta, std::move(v));
}

void StrangSplitting::step(RunState& run, double dt) const {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const double dx = grid_.dx();
  auto fail = [&](const std::string& why, double amp) {
    throw InstabilityError(why + " at t = " + std::to_string(run.t) + " (step " + std::to_string(run.step_count) + ")",
                           run.t, run.step_count, amp);
  };
  try {
    CellState u = hyperbolic::rk4_fv_step(run.cells, 0.5 * dt, dx, params_, options_.reconstruction);
    if (options_.dispersion) u = dispersive_part(u, dt);
    u = hyperbolic::rk4_fv_step(u, 0.5 * dt, dx, params_, options_.reconstruction);
    run.cells = std::move(u);
  } catch (const InstabilityError&) {
    throw;
  } catch (const NumericalError& e) {
    fail(e.what(), std::numeric_limits<double>::infinity());
  }
  run.t += dt;
  ++run.step_count;
  run.diagnostics = diagnose(run.cells, dx);
  const double amp = std::max(run.diagnostics.max_abs_zeta, run.diagnostics.max_abs_v);
  if (!(amp <= options_.blowup_threshold)) fail("amplitude " + std::to_string(amp) + " exceeded threshold", amp);
}

void strang_step(RunState& run, double dt, const StrangSplitting& scheme) { scheme.step(run, dt); }

RunState run_until(RunState run, const StrangSplitting& scheme, const RunOptions& options,
                   const SnapshotCallback& on_snapshot) {
  // Targets sorted; anything at or before the start is emitted immediately.
  std::vector<double> targets;
  for (double t : options.output_times) {
    if (t >= run.t - 1e-12 && t <= options.end_time + 1e-12) targets.push_back(t);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (options.fixed_dt && !(*options.fixed_dt > 0.0)) throw ConfigError("fixed dt must be positive");

  std::size_t next = 0;
  auto emit_due = [&] {
    while (next < targets.size() && targets[next] <= run.t + 1e-12) {
      if (on_snapshot) on_snapshot(run);
      ++next;
    }
  };
  emit_due();
  while (run.t < options.end_time - 1e-12) {
    double dt = options.fixed_dt ? *options.fixed_dt : choose_dt(run.cells, scheme.params(), scheme.grid().dx(),
                                                                 options.cfl);
    const double stop = next < targets.size() ? std::min(targets[next], options.end_time) : options.end_time;
    // Avoid a sliver step just before a stop time.
    if (run.t + dt > stop - 1e-9 * dt) dt = stop - run.t;
    const bool lands = run.t + dt >= stop - 1e-12;
    scheme.step(run, dt);
    if (lands) run.t = stop;
    if (options.on_step) options.on_step(run);
    emit_due();
  }
  return run;
}

}  // namespace boussinesq::splitting
