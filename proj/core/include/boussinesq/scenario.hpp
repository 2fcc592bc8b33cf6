#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boussinesq/config.hpp"
#include "boussinesq/dispersion.hpp"
#include "boussinesq/splitting.hpp"

namespace boussinesq::scenario {

/// Names accepted by builtin_config, in registry order.
[[nodiscard]] const std::vector<std::string>& builtin_names();
/// Throws ConfigError for unknown names.
[[nodiscard]] ScenarioConfig builtin_config(const std::string& name);

/// Cell averages of the configured initial condition on its grid.
[[nodiscard]] CellState initial_cells(const ScenarioConfig& config);

/// Cell averages of the corrected solitary solution(s) at time t, available
/// for Solitary and TwoSolitary initial data with the corrector enabled.
[[nodiscard]] std::optional<CellState> reference_cells(const ScenarioConfig& config, const Grid& grid, double t);

struct Snapshot {
  double t = 0.0;
  CellState cells;
  splitting::Diagnostics diagnostics;
};

struct ScenarioResult {
  std::vector<double> x;  ///< cell centers
  std::vector<Snapshot> snapshots;
  splitting::RunState final_state;
  bool blew_up = false;
  double blowup_time = 0.0;
  std::string blowup_message;
  double max_amplitude = 0.0;  ///< max(|zeta|, |v|) over every completed step
};

/// Drives the splitting scheme to end_time. A blow-up is recorded in the
/// result rather than thrown; callers decide whether it was expected.
[[nodiscard]] ScenarioResult run_scenario(const ScenarioConfig& config,
                                          const std::function<void(const Snapshot&)>& on_snapshot = {});

/// Least-squares slope of log(err) against log(dx) (positive for decaying errors).
[[nodiscard]] double convergence_slope(std::span<const double> dx, std::span<const double> err);

struct ConvergenceRow {
  std::size_t n = 0;
  double err_zeta = 0.0;
  double err_v = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double slope_zeta = 0.0;
  double slope_v = 0.0;
  bool monotone = true;  ///< false when some refinement did not reduce both errors
};

/// Relative L2 errors against the corrected solitary reference at t = end_time.
/// Throws ConfigError when the config has no analytic reference or n is not increasing.
[[nodiscard]] ConvergenceReport run_convergence(const ScenarioConfig& base, std::span<const std::size_t> n_list);

struct DispersionRow {
  double k, cp_model, cg_model, cp_stokes, cg_stokes, ratio_p, ratio_g;
};

/// Phase and group velocities of `model` and of the full Euler relation on
/// `samples` points of (0, k_max].
[[nodiscard]] std::vector<DispersionRow> dispersion_report(const dispersion::DispersionModel& model, double k_max,
                                                           int samples);

struct Crest {
  double position = 0.0;
  double amplitude = 0.0;
  std::size_t index = 0;
};

/// Maximum of zeta within [lo, hi], refined by a parabola through the maximal
/// cell and its periodic neighbours.
[[nodiscard]] Crest locate_crest(std::span<const double> x, std::span<const double> zeta, double lo, double hi);

struct StabilityOutcome {
  ModelVariant variant;
  bool blew_up = false;
  double blowup_time = 0.0;
  double max_amplitude = 0.0;
};

/// The stability_demo configuration run with every model variant.
[[nodiscard]] std::vector<StabilityOutcome> stability_demo(const ScenarioConfig& base);

}  // namespace boussinesq::scenario
