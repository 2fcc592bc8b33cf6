#pragma once

#include <cstddef>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "boussinesq/analytic.hpp"
#include "boussinesq/hyperbolic.hpp"
#include "boussinesq/model.hpp"
#include "boussinesq/splitting.hpp"

namespace boussinesq {

enum class Units { Nondimensional, SI };

enum class InitialKind {
  Solitary,     ///< one corrected solitary wave
  TwoSolitary,  ///< superposition of two corrected solitary waves
  Heap,         ///< background + amplitude exp(-width x^2), v = 0
  DamBreak,     ///< a (1 + tanh(250 - |x|)), v = 0
  Flat          ///< background, v = 0
};

[[nodiscard]] std::string_view to_string(Units units);
[[nodiscard]] std::string_view to_string(InitialKind kind);
[[nodiscard]] std::string_view to_string(analytic::CorrectorCenter center);

/// One simulation, as read from a flat `key = value` file (# starts a comment).
struct ScenarioConfig {
  std::string name = "custom";
  Units units = Units::Nondimensional;

  double x_min = 0.0;
  double x_max = 100.0;
  std::size_t n_cells = 1600;

  PhysParams params{};
  ModelVariant variant = ModelVariant::FactorizedAll;
  hyperbolic::Reconstruction reconstruction = hyperbolic::Reconstruction::Limited;
  splitting::ConversionScheme conversion = splitting::ConversionScheme::Symmetrized;

  InitialKind initial = InitialKind::Solitary;
  // Solitary waves (second wave used by TwoSolitary).
  double amplitude = 0.2;
  double x0 = 20.0;
  int direction = 1;
  double amplitude2 = 0.2;
  double x0_2 = 50.0;
  int direction2 = -1;
  bool corrector = true;
  analytic::CorrectorCenter corrector_center = analytic::CorrectorCenter::Wave;
  // Heap / flat / dam break.
  double heap_amplitude = 0.7;
  double heap_width = 80.0;
  double background = 0.0;
  double dam_amplitude = 0.2091;

  double end_time = 1.0;
  std::vector<double> output_times{};
  double cfl = splitting::kDefaultCfl;
  double dt = 0.0;  ///< > 0 selects the fixed-step mode
  int n_disp = 1;
  double blowup_threshold = std::numeric_limits<double>::infinity();
  bool expect_blowup = false;  ///< a blow-up is the intended outcome (stability demonstrations)

  /// Throws ConfigError on any inconsistency.
  void validate() const;

  [[nodiscard]] Grid grid() const { return Grid(x_min, x_max, n_cells); }
  [[nodiscard]] splitting::StepOptions step_options() const;
  [[nodiscard]] splitting::RunOptions run_options() const;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parses and validates. Unknown or repeated keys are errors; missing keys keep defaults.
[[nodiscard]] ScenarioConfig parse_config(std::istream& in);
[[nodiscard]] ScenarioConfig parse_config_string(std::string_view text);
[[nodiscard]] ScenarioConfig load_config(const std::string& path);

/// Every key, 17 significant digits; parse_config(write_config(c)) == c.
void write_config(std::ostream& out, const ScenarioConfig& config);
[[nodiscard]] std::string config_to_string(const ScenarioConfig& config);

}  // namespace boussinesq
