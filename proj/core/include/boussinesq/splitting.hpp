#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boussinesq/circulant.hpp"
#include "boussinesq/dispersive.hpp"
#include "boussinesq/hyperbolic.hpp"
#include "boussinesq/model.hpp"

namespace boussinesq::splitting {

/// Which face of cell i carries node i.
enum class Bias {
  Left,  ///< node i on x_{i+1/2}; stencil leans on the cells to its left
  Right  ///< mirror image: node i on x_{i-1/2}
};

/// Periodic map from cell averages to interface point values and its exact
/// inverse.
class ConversionOperator {
 public:
  explicit ConversionOperator(std::size_t n, Bias bias = Bias::Left);

  /// Offsets -2..2: (1/30, -13/60, 47/60, 9/20, -1/20) for Left, reversed for Right.
  [[nodiscard]] static PeriodicStencil forward_stencil(Bias bias = Bias::Left);

  [[nodiscard]] Bias bias() const noexcept { return bias_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::vector<double> to_nodal(std::span<const double> averages) const;
  [[nodiscard]] std::vector<double> to_cells(std::span<const double> nodal) const;

 private:
  std::size_t n_;
  Bias bias_;
  PeriodicStencil forward_;
  CyclicBandedSolver inverse_;
};

[[nodiscard]] NodalState cell_to_nodal(const CellState& state, const ConversionOperator& conv);
[[nodiscard]] CellState nodal_to_cell(const NodalState& state, const ConversionOperator& conv);

inline constexpr double kDefaultCfl = 0.4;

/// cfl * dx / max_i(|eps v_i| + sqrt(g (h0 + eps zeta_i))).
/// Throws HyperbolicityError on a nonpositive water column.
[[nodiscard]] double choose_dt(const CellState& state, const PhysParams& params, double dx, double cfl = kDefaultCfl);

struct Diagnostics {
  double mass = 0.0;           ///< sum(zeta) dx
  double max_abs_zeta = 0.0;
  double max_abs_v = 0.0;
};

[[nodiscard]] Diagnostics diagnose(const CellState& cells, double dx);

struct RunState {
  double t = 0.0;
  CellState cells;
  std::size_t step_count = 0;
  Diagnostics diagnostics;
};

/// Thrown when the amplitude threshold is exceeded or the state stops being
/// finite/hyperbolic. Carries where the run stopped.
class InstabilityError : public BlowUpError {
 public:
  InstabilityError(const std::string& what, double t, std::size_t step, double amplitude)
      : BlowUpError(what), time_(t), step_(step), amplitude_(amplitude) {}
  [[nodiscard]] double time() const noexcept { return time_; }
  [[nodiscard]] std::size_t step() const noexcept { return step_; }
  [[nodiscard]] double amplitude() const noexcept { return amplitude_; }

 private:
  double time_;
  std::size_t step_;
  double amplitude_;
};

enum class ConversionScheme {
  Symmetrized,  ///< mean of the dispersive updates through the Left and Right maps
  LeftOnly      ///< one pass through the Left map
};

[[nodiscard]] std::string_view to_string(ConversionScheme scheme);
/// Accepts "symmetrized", "left".
[[nodiscard]] ConversionScheme parse_conversion(std::string_view name);

struct StepOptions {
  int n_disp = 1;  ///< equal sub-steps for the dispersive part
  ConversionScheme conversion = ConversionScheme::Symmetrized;
  double blowup_threshold = std::numeric_limits<double>::infinity();
  hyperbolic::Reconstruction reconstruction = hyperbolic::Reconstruction::Limited;
  bool dispersion = true;  ///< false runs S1 only (pure shallow water)
};

/// S(dt) = S1(dt/2) S2(dt) S1(dt/2) on a fixed periodic grid.
class StrangSplitting {
 public:
  StrangSplitting(const Grid& grid, const PhysParams& params, ModelVariant variant, StepOptions options = {});

  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] const PhysParams& params() const noexcept { return params_; }
  [[nodiscard]] ModelVariant variant() const noexcept { return variant_; }
  [[nodiscard]] const StepOptions& options() const noexcept { return options_; }
  [[nodiscard]] const ConversionOperator& conversion() const noexcept { return conv_; }
  [[nodiscard]] const dispersive::DispersiveOperators& operators() const noexcept { return ops_; }

  [[nodiscard]] RunState initial_state(CellState cells) const;

  /// Advances run by dt and updates diagnostics. Throws InstabilityError.
  void step(RunState& run, double dt) const;

  /// The dispersive part alone, on cell averages: zeta is passed through
  /// untouched, v goes to nodes and back. The Left map is biased, so a single
  /// pass breaks mirror symmetry at the truncation level; averaging with the
  /// mirrored pass restores it.
  [[nodiscard]] CellState dispersive_part(const CellState& cells, double dt) const;

 private:
  [[nodiscard]] std::vector<double> dispersive_velocity(const CellState& cells, double dt,
                                                       const ConversionOperator& conv) const;

  Grid grid_;
  PhysParams params_;
  ModelVariant variant_;
  StepOptions options_;
  ConversionOperator conv_;
  ConversionOperator mirror_conv_;
  dispersive::DispersiveOperators ops_;
};

void strang_step(RunState& run, double dt, const StrangSplitting& scheme);

using SnapshotCallback = std::function<void(const RunState&)>;

struct RunOptions {
  double end_time = 0.0;
  std::vector<double> output_times;  ///< snapshots; values outside [t0, end_time] are ignored
  double cfl = kDefaultCfl;
  std::optional<double> fixed_dt;    ///< overrides the CFL rule (last step before an output may be shorter)
  SnapshotCallback on_step;          ///< called after every completed step
};

/// Steps from run.t to end_time, landing exactly on every output time and
/// invoking the callback there.
[[nodiscard]] RunState run_until(RunState run, const StrangSplitting& scheme, const RunOptions& options,
                                 const SnapshotCallback& on_snapshot = {});

}  // namespace boussinesq::splitting
