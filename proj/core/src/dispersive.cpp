#include "boussinesq/dispersive.hpp"

#include <cmath>
#include <string>

#include "rk4.hpp"

namespace boussinesq::dispersive {

namespace {

// Unit-spacing coefficients, offsets -r..r.
std::vector<double> unit_coefficients(int order) {
  switch (order) {
    case 1:
      return {1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0};
    case 2:
      return {-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0};
    case 3:
      return {1.0 / 8.0, -1.0, 13.0 / 8.0, 0.0, -13.0 / 8.0, 1.0, -1.0 / 8.0};
    case 4:
      return {-1.0 / 6.0, 2.0, -39.0 / 6.0, 56.0 / 6.0, -39.0 / 6.0, 2.0, -1.0 / 6.0};
    case 5:
      return {1.0 / 6.0, -9.0 / 6.0, 26.0 / 6.0, -29.0 / 6.0, 0.0, 29.0 / 6.0, -26.0 / 6.0, 9.0 / 6.0, -1.0 / 6.0};
    default:
      throw ConfigError("derivative order must be in 1..5, got " + std::to_string(order));
  }
}

std::size_t min_nodes(ModelVariant variant) { return variant == ModelVariant::Unfactorized ? 9 : 7; }

void check_finite(std::span<const double> v, const char* where) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw BlowUpError(std::string("non-finite velocity in ") + where + " at node " + std::to_string(i));
    }
  }
}

}  // namespace

StencilOperator derivative_stencil(int order) { return {order, PeriodicStencil(unit_coefficients(order))}; }

std::vector<double> apply_stencil(const StencilOperator& op, std::span<const double> field, double dx) {
  if (!(dx > 0.0)) throw ConfigError("apply_stencil: dx must be positive");
  return op.stencil.apply(field, std::pow(dx, -op.order));
}

DispersiveOperators::DispersiveOperators(const Grid& grid, const PhysParams& params, ModelVariant variant)
    : variant_(variant), params_(params), n_(grid.size()), dx_(grid.dx()) {
  params_.validate();
  check_variant(variant_, params_);
  if (n_ < min_nodes(variant_)) {
    throw ConfigError("dispersive operators need at least " + std::to_string(min_nodes(variant_)) + " nodes for " +
                      std::string(to_string(variant_)));
  }
  derivatives_.reserve(5);
  for (int d = 1; d <= 5; ++d) derivatives_.push_back(PeriodicStencil(unit_coefficients(d)).scaled(std::pow(dx_, -d)));

  const double ea = params_.epsilon * params_.alpha;
  p_stencil_ = PeriodicStencil::identity() + derivatives_[1].scaled(-ea / 3.0);
  j_stencil_ = p_stencil_ + derivatives_[3].scaled(params_.epsilon * ea / 45.0);
  if (params_.epsilon == 0.0) {
    p_stencil_ = PeriodicStencil::identity();
    j_stencil_ = PeriodicStencil::identity();
  }
  j_solver_ = CyclicBandedSolver(j_stencil_, n_);
  if (variant_ != ModelVariant::Unfactorized) p_solver_ = CyclicBandedSolver(p_stencil_, n_);
}

const PeriodicStencil& DispersiveOperators::d(int order) const {
  if (order < 1 || order > 5) throw ConfigError("derivative order must be in 1..5");
  return derivatives_[static_cast<std::size_t>(order - 1)];
}

DispersiveOperators build_operators(const Grid& grid, const PhysParams& params, ModelVariant variant) {
  return DispersiveOperators(grid, params, variant);
}

ZetaForcing zeta_forcing(std::span<const double> zeta, const DispersiveOperators& ops) {
  const std::size_t n = ops.size();
  if (zeta.size() != n) throw ConfigError("dispersive rhs: state size does not match operators");
  const PhysParams& p = ops.params();
  const double g = p.gravity;
  const double e2 = p.epsilon * p.epsilon;

  const std::vector<double> dz = ops.d(1).apply(zeta);
  std::vector<double> direct(n);
  for (std::size_t i = 0; i < n; ++i) direct[i] = g / p.alpha * dz[i];

  // bracket = (g/a) D1 zeta + zeta-dependent high-order terms
  std::vector<double> bracket = direct;
  auto add = [&](const std::vector<double>& term, double c) {
    for (std::size_t i = 0; i < n; ++i) bracket[i] += c * term[i];
  };
  auto add_product = [&](std::span<const double> a, const std::vector<double>& b, double c) {
    for (std::size_t i = 0; i < n; ++i) bracket[i] += c * a[i] * b[i];
  };

  if (e2 != 0.0) {
    switch (ops.variant()) {
      case ModelVariant::FactorizedAll: {
        std::vector<double> gdz(n);
        for (std::size_t i = 0; i < n; ++i) gdz[i] = g * dz[i];
        const std::vector<double> w = ops.solve_p(gdz);
        add(ops.d(4).apply(w), 2.0 / 45.0 * e2);
        add_product(zeta, ops.d(2).apply(w), 2.0 / 3.0 * e2);
        add_product(dz, ops.d(1).apply(w), e2);
        break;
      }
      case ModelVariant::Unfactorized:
        add(ops.d(5).apply(zeta), 2.0 / 45.0 * e2 * g);
        add_product(zeta, ops.d(3).apply(zeta), 2.0 / 3.0 * e2 * g);
        add_product(dz, ops.d(2).apply(zeta), e2 * g);
        break;
      case ModelVariant::FifthOnlyFactorized: {
        std::vector<double> gdz(n);
        for (std::size_t i = 0; i < n; ++i) gdz[i] = g * dz[i];
        const std::vector<double> w = ops.solve_p(gdz);
        add(ops.d(4).apply(w), 2.0 / 45.0 * e2);
        add_product(zeta, ops.d(3).apply(zeta), 2.0 / 3.0 * e2 * g);
        add_product(dz, ops.d(2).apply(zeta), e2 * g);
        break;
      }
    }
  }

  const std::vector<double> inv = ops.solve_j(bracket);
  ZetaForcing f;
  f.rate.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.rate[i] = direct[i] - inv[i];
  return f;
}

std::vector<double> velocity_rate(std::span<const double> v, const ZetaForcing& forcing,
                                  const DispersiveOperators& ops) {
  const std::size_t n = ops.size();
  if (v.size() != n || forcing.rate.size() != n) throw ConfigError("dispersive rhs: state size does not match operators");
  const double eps = ops.params().epsilon;
  if (eps == 0.0) return forcing.rate;
  std::vector<double> sq = ops.d(1).apply(v);
  for (double& s : sq) s *= s;
  std::vector<double> term = ops.d(1).apply(sq, 2.0 / 3.0 * eps * eps);
  ops.j_solver().solve(term, term);
  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) rate[i] = forcing.rate[i] - term[i];
  return rate;
}

NodalState dispersive_rhs(const NodalState& state, const DispersiveOperators& ops) {
  const ZetaForcing f = zeta_forcing(state.zeta, ops);
  NodalState rate(state.size());
  rate.v = velocity_rate(state.v, f, ops);
  return rate;
}

NodalState rk4_fd_step(const NodalState& state, double dt, const DispersiveOperators& ops) {
  if (!(dt > 0.0)) throw ConfigError("rk4_fd_step: dt must be positive");
  const ZetaForcing f = zeta_forcing(state.zeta, ops);
  auto rhs = [&](const NodalState& u) {
    NodalState r(u.size());
    r.v = velocity_rate(u.v, f, ops);
    return r;
  };
  NodalState out = detail::rk4(state, dt, rhs);
  // The zero zeta-rate keeps the values, but copy to make the invariance exact.
  out.zeta = state.zeta;
  check_finite(out.v, "dispersive step");
  return out;
}

NodalState euler_fd_step(const NodalState& state, double dt, const DispersiveOperators& ops) {
  if (!(dt > 0.0)) throw ConfigError("euler_fd_step: dt must be positive");
  const ZetaForcing f = zeta_forcing(state.zeta, ops);
  const std::vector<double> r = velocity_rate(state.v, f, ops);
  NodalState out = state;
  for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += dt * r[i];
  check_finite(out.v, "dispersive step");
  return out;
}

}  // namespace boussinesq::dispersive
