#pragma once

#include <span>
#include <vector>

#include "boussinesq/circulant.hpp"
#include "boussinesq/model.hpp"

namespace boussinesq::dispersive {

/// Centered fourth-order difference formula for d^order/dx^order, stored with
/// unit grid spacing; apply_stencil scales by dx^-order.
struct StencilOperator {
  int order = 1;
  PeriodicStencil stencil;
};

/// order in 1..5.
[[nodiscard]] StencilOperator derivative_stencil(int order);

[[nodiscard]] std::vector<double> apply_stencil(const StencilOperator& op, std::span<const double> field, double dx);

/// Everything the dispersive step needs, assembled and factored once per run.
/// Immutable after construction; safe to share between threads.
class DispersiveOperators {
 public:
  DispersiveOperators(const Grid& grid, const PhysParams& params, ModelVariant variant);

  [[nodiscard]] ModelVariant variant() const noexcept { return variant_; }
  [[nodiscard]] const PhysParams& params() const noexcept { return params_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double dx() const noexcept { return dx_; }

  /// Derivative stencils with dx^-d already folded in.
  [[nodiscard]] const PeriodicStencil& d(int order) const;

  /// J_h = I - (eps a / 3) D2 + (eps^2 a / 45) D4
  [[nodiscard]] const PeriodicStencil& j_stencil() const noexcept { return j_stencil_; }
  /// P_h = I - (eps a / 3) D2
  [[nodiscard]] const PeriodicStencil& p_stencil() const noexcept { return p_stencil_; }

  [[nodiscard]] std::vector<double> solve_j(std::span<const double> rhs) const { return j_solver_.solve(rhs); }
  [[nodiscard]] std::vector<double> solve_p(std::span<const double> rhs) const { return p_solver_.solve(rhs); }
  [[nodiscard]] const CyclicBandedSolver& j_solver() const noexcept { return j_solver_; }

 private:
  ModelVariant variant_;
  PhysParams params_;
  std::size_t n_;
  double dx_;
  std::vector<PeriodicStencil> derivatives_;  // index 0 -> D1
  PeriodicStencil j_stencil_;
  PeriodicStencil p_stencil_;
  CyclicBandedSolver j_solver_;
  CyclicBandedSolver p_solver_;
};

/// Throws ConfigError for grids narrower than the variant's widest stencil or
/// FifthOnlyFactorized with alpha != 1; NumericalError if J_h or P_h is singular.
[[nodiscard]] DispersiveOperators build_operators(const Grid& grid, const PhysParams& params, ModelVariant variant);

/// The v-rate contributions that depend on zeta only. zeta does not move
/// during the dispersive step, so these are evaluated once per step.
struct ZetaForcing {
  std::vector<double> rate;  ///< (g/a) D1 zeta - J_h^{-1}[zeta terms]
};

[[nodiscard]] ZetaForcing zeta_forcing(std::span<const double> zeta, const DispersiveOperators& ops);

/// d zeta/dt = 0 and the full v-rate of the dispersive subsystem.
[[nodiscard]] NodalState dispersive_rhs(const NodalState& state, const DispersiveOperators& ops);

/// v-rate given the precomputed forcing: forcing - J_h^{-1}[(2/3) eps^2 D1((D1 v)^2)].
[[nodiscard]] std::vector<double> velocity_rate(std::span<const double> v, const ZetaForcing& forcing,
                                                const DispersiveOperators& ops);

/// Classical RK4 on the dispersive subsystem; zeta is returned bit-identical.
/// Throws BlowUpError on non-finite velocities.
[[nodiscard]] NodalState rk4_fd_step(const NodalState& state, double dt, const DispersiveOperators& ops);

/// Forward Euler counterpart, kept for step-order checks.
[[nodiscard]] NodalState euler_fd_step(const NodalState& state, double dt, const DispersiveOperators& ops);

}  // namespace boussinesq::dispersive
