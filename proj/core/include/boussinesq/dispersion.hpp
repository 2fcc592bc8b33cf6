#pragma once

#include <string_view>
#include <vector>

#include "boussinesq/model.hpp"

namespace boussinesq::dispersion {

enum class Relation {
  EbUnfactorized,          ///< eB model with direct high-order derivatives, rest state
  EbFactorized,            ///< eB model with factorized high-order derivatives, rest state
  FullEuler,               ///< g h0 |k| tanh|k|, the Stokes linear reference
  LinearizedUnfactorized,  ///< perturbation of a steady state, direct derivatives (alpha = 1)
  LinearizedFifthOnly,     ///< perturbation of a steady state, only d^5 factorized (alpha = 1)
  LinearizedFactorized     ///< perturbation of a steady state, all derivatives factorized
};

struct Background {
  double zeta = 0.0;
  double v = 0.0;
};

/// A linear dispersion relation. Wavenumbers are measured in units of 1/h0
/// in the rational dispersive factors; epsilon is not used (the relations
/// are written for the dimensional system with epsilon = 1).
struct DispersionModel {
  Relation relation = Relation::EbFactorized;
  PhysParams params{};
  Background background{};
};

[[nodiscard]] bool is_linearized(Relation relation) noexcept;

[[nodiscard]] std::string_view to_string(Relation relation);
/// Accepts the to_string spellings ("eb_unfactorized", ...), case-insensitively.
[[nodiscard]] Relation parse_relation(std::string_view name);

/// (omega - k v_bar)^2; for rest-state relations this is omega^2. A negative
/// value means a complex root, i.e. an unstable mode.
[[nodiscard]] double omega_squared(const DispersionModel& model, double k);

struct FrequencyRoot {
  double omega = 0.0;        ///< real part, right-moving branch
  double growth_rate = 0.0;  ///< imaginary part magnitude (0 when stable)
  bool unstable = false;
};

[[nodiscard]] FrequencyRoot frequency(const DispersionModel& model, double k);

struct TaylorCoefficients {
  double c2 = 0.0;
  double c4 = 0.0;
  double c6 = 0.0;
};

/// Coefficients of k^2, k^4, k^6 in omega^2 / (g h0), by exact power-series
/// division of the rational relation (tanh series for FullEuler).
[[nodiscard]] TaylorCoefficients taylor_coefficients(const DispersionModel& model);

struct Velocities {
  double phase = 0.0;
  double group = 0.0;
};

/// Phase omega/k and group d omega/dk (4th-order central difference with step
/// max(1e-4, 1e-4 k)). Throws NumericalError when omega^2 < 0 near k.
[[nodiscard]] Velocities velocities(const DispersionModel& model, double k);

enum class ErrorFunctional {
  /// int_0^K (1/k) (dCp/Cp + dCg/Cg)^2 dk, the weighted-error formula as printed.
  WeightedSum,
  /// int_0^K ((dCp/Cp)^2 + (dCg/Cg)^2) dk. Reproduces the reported optima
  /// (0.8351 for K = 1, 1.0555 for K = 10) that WeightedSum misses.
  SumOfSquares
};

inline constexpr ErrorFunctional kDefaultFunctional = ErrorFunctional::SumOfSquares;

struct QuadratureOptions {
  double k_min = 1e-6;
  int panels = 4000;  ///< even, >= 2000
};

/// Error of `model` (with its alpha replaced by `alpha`) against FullEuler over
/// [0, K], composite Simpson on [k_min, K]. Throws NumericalError on any
/// non-finite integrand sample.
[[nodiscard]] double weighted_error(const DispersionModel& model, double alpha, double k_max,
                                    ErrorFunctional functional = kDefaultFunctional,
                                    const QuadratureOptions& quad = {});

struct AlphaOptimum {
  double alpha = 0.0;
  double error = 0.0;
  bool at_bracket_edge = false;  ///< minimizer hugged the bracket: bracket likely wrong
};

struct OptimizeOptions {
  double alpha_lo = 0.1;
  double alpha_hi = 2.0;
  double tolerance = 1e-4;
  ErrorFunctional functional = kDefaultFunctional;
  QuadratureOptions quad{};
};

/// Golden-section minimization of weighted_error over alpha. Values of alpha
/// for which the relation loses real roots inside [0, K] count as +infinity.
[[nodiscard]] AlphaOptimum optimize_alpha(const DispersionModel& model, double k_max, const OptimizeOptions& opts = {});

/// weighted_error on a uniform alpha grid; non-finite cases reported as +inf.
struct AlphaScanPoint {
  double alpha;
  double error;
};
[[nodiscard]] std::vector<AlphaScanPoint> scan_alpha(const DispersionModel& model, double k_max, double alpha_lo,
                                                     double alpha_hi, int samples,
                                                     ErrorFunctional functional = kDefaultFunctional,
                                                     const QuadratureOptions& quad = {});

/// Largest background zeta_bar for which the linearized variant keeps real
/// frequencies at wavenumber k. FifthOnlyFactorized requires alpha = 1.
[[nodiscard]] double stability_bound(ModelVariant variant, double k, double alpha);

/// The linearized relation matching a model variant.
[[nodiscard]] Relation linearized_relation(ModelVariant variant) noexcept;

}  // namespace boussinesq::dispersion
