#include "boussinesq/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rk4.hpp"

namespace boussinesq::hyperbolic {

ConservedPair physical_flux(ConservedPair u, const PhysParams& params) {
  const double h = params.water_column(u.zeta);
  if (!(h > 0.0)) throw HyperbolicityError("nonpositive water column h = " + std::to_string(h));
  return {h * u.v, 0.5 * params.epsilon * u.v * u.v + params.gravity * u.zeta};
}

WaveSpeeds wave_speeds(ConservedPair u, const PhysParams& params) {
  const double h = params.water_column(u.zeta);
  if (!(h > 0.0)) throw HyperbolicityError("nonpositive water column h = " + std::to_string(h));
  const double c = std::sqrt(params.gravity * h);
  const double adv = params.epsilon * u.v;
  return {adv - c, adv + c};
}

Deltas reconstruction_deltas(std::span<const double, 5> s) noexcept {
  // s = (U_{i-2}, U_{i-1}, U_i, U_{i+1}, U_{i+2})
  const double um2 = s[0], um1 = s[1], u0 = s[2], up1 = s[3], up2 = s[4];
  const double third_fwd = -um1 + 3.0 * u0 - 3.0 * up1 + up2;
  const double third_bwd = -um2 + 3.0 * um1 - 3.0 * u0 + up1;
  Deltas d;
  d.plus = 2.0 / 3.0 * (up1 - u0) + 1.0 / 3.0 * (u0 - um1) - 0.1 * third_fwd - third_bwd / 15.0;
  d.minus = 2.0 / 3.0 * (u0 - um1) + 1.0 / 3.0 * (up1 - u0) - 0.1 * third_bwd - third_fwd / 15.0;
  return d;
}

namespace {

constexpr double sgn(double x) noexcept { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double limiter(double u, double v, double w) noexcept {
  const double su = sgn(u);
  if (su == 0.0 || su != sgn(v)) return 0.0;
  return std::min({std::abs(u), std::abs(v), 2.0 * std::abs(w)}) * su;
}

double wide_limiter(double u, double v, double w) noexcept {
  const double su = sgn(u);
  if (su == 0.0 || su != sgn(v)) return 0.0;
  return std::min({2.0 * std::abs(u), 2.0 * std::abs(v), std::abs(w)}) * su;
}

std::string_view to_string(Reconstruction mode) {
  switch (mode) {
    case Reconstruction::Limited: return "limited";
    case Reconstruction::PrintedLimiter: return "printed";
    case Reconstruction::Unlimited: return "unlimited";
  }
  return "unknown";
}

Reconstruction parse_reconstruction(std::string_view name) {
  if (name == "limited") return Reconstruction::Limited;
  if (name == "printed") return Reconstruction::PrintedLimiter;
  if (name == "unlimited") return Reconstruction::Unlimited;
  throw ConfigError("unknown reconstruction '" + std::string(name) + "'");
}

FaceValues reconstruct_faces(std::span<const double> avg, Reconstruction mode) {
  const std::size_t n = avg.size();
  if (n < 5) throw ConfigError("reconstruction needs at least 5 cells");
  FaceValues out{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    // Periodic ghosts: U_{-k} = U_{N-k}, U_{N-1+k} = U_{k-1}.
    const double stencil[5] = {avg[(i + n - 2) % n], avg[(i + n - 1) % n], avg[i], avg[(i + 1) % n],
                               avg[(i + 2) % n]};
    const Deltas d = reconstruction_deltas(std::span<const double, 5>(stencil));
    double lp = d.plus;
    double lm = d.minus;
    if (mode != Reconstruction::Unlimited) {
      const double down = stencil[2] - stencil[1];  // U_i - U_{i-1}
      const double up = stencil[3] - stencil[2];    // U_{i+1} - U_i
      const auto lim = mode == Reconstruction::Limited ? wide_limiter : limiter;
      lp = lim(down, up, d.plus);
      lm = lim(up, down, d.minus);
    }
    out.plus[i] = stencil[2] + 0.5 * lp;
    out.minus[i] = stencil[2] - 0.5 * lm;
  }
  return out;
}

InterfaceStates reconstruct_interfaces(const CellState& state, Reconstruction mode) {
  return {reconstruct_faces(state.zeta, mode), reconstruct_faces(state.v, mode)};
}

ConservedPair numerical_flux(ConservedPair left, ConservedPair right, const PhysParams& params, FluxKind kind) {
  switch (kind) {
    case FluxKind::Rusanov: {
      const ConservedPair fl = physical_flux(left, params);
      const ConservedPair fr = physical_flux(right, params);
      const WaveSpeeds wl = wave_speeds(left, params);
      const WaveSpeeds wr = wave_speeds(right, params);
      const double s = std::max({std::abs(wl.left), std::abs(wl.right), std::abs(wr.left), std::abs(wr.right)});
      return {0.5 * (fl.zeta + fr.zeta) - 0.5 * s * (right.zeta - left.zeta),
              0.5 * (fl.v + fr.v) - 0.5 * s * (right.v - left.v)};
    }
  }
  return {};
}

CellState hyperbolic_rhs(const CellState& state, double dx, const PhysParams& params, Reconstruction mode) {
  const std::size_t n = state.size();
  const InterfaceStates faces = reconstruct_interfaces(state, mode);
  // flux[i] lives on x_{i+1/2}, between cell i (its plus face) and cell i+1 (its minus face).
  std::vector<ConservedPair> flux(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    flux[i] = numerical_flux({faces.zeta.plus[i], faces.v.plus[i]}, {faces.zeta.minus[j], faces.v.minus[j]}, params);
  }
  CellState rate(n);
  const double inv_dx = 1.0 / dx;
  for (std::size_t i = 0; i < n; ++i) {
    const ConservedPair& right = flux[i];
    const ConservedPair& left = flux[(i + n - 1) % n];
    rate.zeta[i] = -(right.zeta - left.zeta) * inv_dx;
    rate.v[i] = -(right.v - left.v) * inv_dx;
  }
  return rate;
}

CellState rk4_fv_step(const CellState& state, double dt, double dx, const PhysParams& params, Reconstruction mode) {
  auto rhs = [&](const CellState& u) { return hyperbolic_rhs(u, dx, params, mode); };
  return detail::rk4(state, dt, rhs);
}

}  // namespace boussinesq::hyperbolic
