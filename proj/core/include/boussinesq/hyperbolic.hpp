#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "boussinesq/model.hpp"

namespace boussinesq::hyperbolic {

/// Conserved variables U = (zeta, v) of the shallow-water part.
struct ConservedPair {
  double zeta = 0.0;
  double v = 0.0;
};

/// F(U) = (h v, (eps/2) v^2 + g zeta), h = h0 + eps zeta.
/// Throws HyperbolicityError when h <= 0.
[[nodiscard]] ConservedPair physical_flux(ConservedPair u, const PhysParams& params);

/// Eigenvalues eps v -/+ sqrt(g h) of the flux Jacobian.
struct WaveSpeeds {
  double left = 0.0;
  double right = 0.0;
};
[[nodiscard]] WaveSpeeds wave_speeds(ConservedPair u, const PhysParams& params);

/// Fixed five-point high-order increments for cell i from U_{i-2..i+2}.
struct Deltas {
  double plus = 0.0;
  double minus = 0.0;
};
[[nodiscard]] Deltas reconstruction_deltas(std::span<const double, 5> stencil) noexcept;

/// min(|u|, |v|, 2|w|) sgn(u) when sgn(u) = sgn(v), 0 otherwise (sgn(0) = 0).
[[nodiscard]] double limiter(double u, double v, double w) noexcept;

/// min(2|u|, 2|v|, |w|) sgn(u) when sgn(u) = sgn(v), 0 otherwise. Admits the
/// high-order increment w unchanged away from extrema and steep gradients.
[[nodiscard]] double wide_limiter(double u, double v, double w) noexcept;

enum class Reconstruction {
  Limited,         ///< production path: increments clipped by wide_limiter
  PrintedLimiter,  ///< increments clipped by limiter (about second order on smooth data)
  Unlimited        ///< raw five-point increments (fifth-order interface values)
};

[[nodiscard]] std::string_view to_string(Reconstruction mode);
/// Accepts "limited", "printed", "unlimited".
[[nodiscard]] Reconstruction parse_reconstruction(std::string_view name);

/// Face values of every cell: plus = right face x_{i+1/2}, minus = left face x_{i-1/2}.
struct FaceValues {
  std::vector<double> plus;
  std::vector<double> minus;
};

struct InterfaceStates {
  FaceValues zeta;
  FaceValues v;
};

[[nodiscard]] FaceValues reconstruct_faces(std::span<const double> averages,
                                           Reconstruction mode = Reconstruction::Limited);
[[nodiscard]] InterfaceStates reconstruct_interfaces(const CellState& state,
                                                     Reconstruction mode = Reconstruction::Limited);

/// Two-point numerical flux. The concrete choice is a seam: only Rusanov is
/// provided at the moment.
enum class FluxKind { Rusanov };

/// Local Lax-Friedrichs: (F(L) + F(R))/2 - s (R - L)/2, s = max |eps v| + sqrt(g h).
[[nodiscard]] ConservedPair numerical_flux(ConservedPair left, ConservedPair right, const PhysParams& params,
                                           FluxKind kind = FluxKind::Rusanov);

/// Semi-discrete rate -(F_{i+1/2} - F_{i-1/2}) / dx on a periodic grid.
[[nodiscard]] CellState hyperbolic_rhs(const CellState& state, double dx, const PhysParams& params,
                                       Reconstruction mode = Reconstruction::Limited);

/// Classical RK4 on hyperbolic_rhs. Throws HyperbolicityError if any stage
/// state loses positivity of the water column.
[[nodiscard]] CellState rk4_fv_step(const CellState& state, double dt, double dx, const PhysParams& params,
                                    Reconstruction mode = Reconstruction::Limited);

}  // namespace boussinesq::hyperbolic
