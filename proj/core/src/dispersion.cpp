#include "boussinesq/dispersion.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace boussinesq::dispersion {

namespace {

constexpr std::pair<Relation, std::string_view> kRelationNames[] = {
    {Relation::EbUnfactorized, "eb_unfactorized"},
    {Relation::EbFactorized, "eb_factorized"},
    {Relation::FullEuler, "full_euler"},
    {Relation::LinearizedUnfactorized, "linearized_unfactorized"},
    {Relation::LinearizedFifthOnly, "linearized_fifth_only"},
    {Relation::LinearizedFactorized, "linearized_factorized"},
};

}  // namespace

std::string_view to_string(Relation relation) {
  for (const auto& [r, name] : kRelationNames) {
    if (r == relation) return name;
  }
  return "unknown";
}

Relation parse_relation(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (const auto& [r, known] : kRelationNames) {
    if (lower == known) return r;
  }
  throw ConfigError("unknown dispersion relation '" + std::string(name) + "'");
}

namespace {

// Rational dispersive factor R(kappa) with omega^2 = g h0 k^2 R for the
// rest-state relations, or (omega - k v)^2 = g (h0 + zeta) k^2 R for the
// linearized ones. kappa = k h0.
double dispersive_factor(const DispersionModel& model, double kappa) {
  const double a = model.params.alpha;
  const double k2 = kappa * kappa;
  const double k4 = k2 * k2;
  const double zb = model.background.zeta;
  switch (model.relation) {
    case Relation::EbUnfactorized: {
      const double num = 1.0 + (a - 1.0) / 3.0 * k2 + (a + 1.0) / 45.0 * k4;
      const double den = 1.0 + a / 3.0 * k2 + a / 45.0 * k4;
      return num / den;
    }
    case Relation::EbFactorized: {
      const double num = 1.0 + (a - 1.0) / 3.0 * k2 + k4 / 45.0 * (a - 1.0 + 2.0 / (1.0 + a * k2 / 3.0));
      const double den = 1.0 + a / 3.0 * k2 + a / 45.0 * k4;
      return num / den;
    }
    case Relation::FullEuler:
      return kappa == 0.0 ? 1.0 : std::tanh(std::abs(kappa)) / std::abs(kappa);
    case Relation::LinearizedUnfactorized: {
      const double num = 1.0 - 2.0 / 3.0 * k2 * zb + 2.0 / 45.0 * k4;
      const double den = 1.0 + k2 / 3.0 + k4 / 45.0;
      return num / den;
    }
    case Relation::LinearizedFifthOnly: {
      const double num = 1.0 - 2.0 / 3.0 * k2 * zb + k4 / 45.0 * (2.0 / (1.0 + k2 / 3.0));
      const double den = 1.0 + k2 / 3.0 + k4 / 45.0;
      return num / den;
    }
    case Relation::LinearizedFactorized: {
      const double p = 1.0 + a / 3.0 * k2;
      const double num = 1.0 + (a - 1.0) * k2 / 3.0 - 2.0 * k2 * zb / (3.0 * p) + (a - 1.0) * k4 / 45.0 +
                         2.0 * k4 / (45.0 * p);
      const double den = 1.0 + a / 3.0 * k2 + a / 45.0 * k4;
      return num / den;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double column(const DispersionModel& model) {
  return model.params.depth + (is_linearized(model.relation) ? model.background.zeta : 0.0);
}

// Odd (right-moving) branch, usable across k = 0 for finite differences.
double signed_omega(const DispersionModel& model, double k) {
  const double w2 = omega_squared(model, k);
  if (!(w2 >= 0.0)) {
    throw NumericalError("complex frequency at k = " + std::to_string(k) + " (omega^2 = " + std::to_string(w2) + ")");
  }
  const double root = std::sqrt(w2);
  const double shift = is_linearized(model.relation) ? k * model.background.v : 0.0;
  return shift + (k < 0.0 ? -root : root);
}

// Quotient of two truncated series in s = k^2, up to s^2.
std::array<double, 3> series_divide(const std::array<double, 3>& n, const std::array<double, 3>& d) {
  std::array<double, 3> q{};
  q[0] = n[0] / d[0];
  q[1] = (n[1] - d[1] * q[0]) / d[0];
  q[2] = (n[2] - d[1] * q[1] - d[2] * q[0]) / d[0];
  return q;
}

double relative(double model, double reference) { return (model - reference) / reference; }

}  // namespace

bool is_linearized(Relation relation) noexcept {
  return relation == Relation::LinearizedUnfactorized || relation == Relation::LinearizedFifthOnly ||
         relation == Relation::LinearizedFactorized;
}

double omega_squared(const DispersionModel& model, double k) {
  if (k == 0.0) return 0.0;
  const double kappa = k * model.params.depth;
  return model.params.gravity * column(model) * k * k * dispersive_factor(model, kappa);
}

FrequencyRoot frequency(const DispersionModel& model, double k) {
  const double w2 = omega_squared(model, k);
  const double shift = is_linearized(model.relation) ? k * model.background.v : 0.0;
  FrequencyRoot root;
  if (w2 >= 0.0) {
    root.omega = shift + std::sqrt(w2);
  } else {
    root.omega = shift;
    root.growth_rate = std::sqrt(-w2);
    root.unstable = true;
  }
  return root;
}

TaylorCoefficients taylor_coefficients(const DispersionModel& model) {
  const double a = model.params.alpha;
  std::array<double, 3> q{};
  switch (model.relation) {
    case Relation::EbUnfactorized:
      q = series_divide({1.0, (a - 1.0) / 3.0, (a + 1.0) / 45.0}, {1.0, a / 3.0, a / 45.0});
      break;
    case Relation::EbFactorized:
      // 2 / (1 + a s / 3) = 2 - (2a/3) s + ..., only its constant term reaches s^2.
      q = series_divide({1.0, (a - 1.0) / 3.0, (a - 1.0 + 2.0) / 45.0}, {1.0, a / 3.0, a / 45.0});
      break;
    case Relation::FullEuler:
      q = {1.0, -1.0 / 3.0, 2.0 / 15.0};
      break;
    default:
      throw ConfigError("taylor_coefficients is defined for rest-state relations only");
  }
  return {q[0], q[1], q[2]};
}

Velocities velocities(const DispersionModel& model, double k) {
  if (!(k > 0.0)) throw ConfigError("velocities require k > 0");
  const double h = std::max(1e-4, 1e-4 * k);
  const double w = signed_omega(model, k);
  const double group = (-signed_omega(model, k + 2.0 * h) + 8.0 * signed_omega(model, k + h) -
                        8.0 * signed_omega(model, k - h) + signed_omega(model, k - 2.0 * h)) /
                       (12.0 * h);
  return {w / k, group};
}

double weighted_error(const DispersionModel& model, double alpha, double k_max, ErrorFunctional functional,
                      const QuadratureOptions& quad) {
  if (!(k_max > 0.0)) throw ConfigError("weighted_error requires K > 0");
  if (quad.panels < 2 || quad.panels % 2 != 0) throw ConfigError("Simpson quadrature needs an even panel count");
  if (!(quad.k_min < k_max)) throw ConfigError("weighted_error requires k_min < K");

  DispersionModel tuned = model;
  tuned.params.alpha = alpha;
  DispersionModel stokes = model;
  stokes.relation = Relation::FullEuler;

  auto integrand = [&](double k) {
    const Velocities m = velocities(tuned, k);
    const Velocities s = velocities(stokes, k);
    const double rp = relative(m.phase, s.phase);
    const double rg = relative(m.group, s.group);
    const double value = functional == ErrorFunctional::WeightedSum ? (rp + rg) * (rp + rg) / k : rp * rp + rg * rg;
    if (!std::isfinite(value)) throw NumericalError("non-finite weighted-error integrand at k = " + std::to_string(k));
    return value;
  };

  const double h = (k_max - quad.k_min) / quad.panels;
  double sum = integrand(quad.k_min) + integrand(k_max);
  for (int i = 1; i < quad.panels; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(quad.k_min + i * h);
  }
  return sum * h / 3.0;
}

namespace {

double error_or_inf(const DispersionModel& model, double alpha, double k_max, ErrorFunctional functional,
                    const QuadratureOptions& quad) {
  try {
    return weighted_error(model, alpha, k_max, functional, quad);
  } catch (const NumericalError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

AlphaOptimum optimize_alpha(const DispersionModel& model, double k_max, const OptimizeOptions& opts) {
  if (!(opts.alpha_lo > 0.0 && opts.alpha_hi > opts.alpha_lo)) throw ConfigError("invalid alpha bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double a) { return error_or_inf(model, a, k_max, opts.functional, opts.quad); };

  double lo = opts.alpha_lo;
  double hi = opts.alpha_hi;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > opts.tolerance) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  AlphaOptimum out;
  out.alpha = 0.5 * (lo + hi);
  out.error = f(out.alpha);
  const double edge = 2.0 * opts.tolerance;
  out.at_bracket_edge = (out.alpha - opts.alpha_lo < edge) || (opts.alpha_hi - out.alpha < edge);
  return out;
}

std::vector<AlphaScanPoint> scan_alpha(const DispersionModel& model, double k_max, double alpha_lo, double alpha_hi,
                                       int samples, ErrorFunctional functional, const QuadratureOptions& quad) {
  if (samples < 2) throw ConfigError("alpha scan needs at least two samples");
  std::vector<AlphaScanPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double a = alpha_lo + (alpha_hi - alpha_lo) * i / (samples - 1);
    out.push_back({a, error_or_inf(model, a, k_max, functional, quad)});
  }
  return out;
}

double stability_bound(ModelVariant variant, double k, double alpha) {
  if (!(k > 0.0)) throw ConfigError("stability_bound requires k > 0");
  const double k2 = k * k;
  const double k4 = k2 * k2;
  switch (variant) {
    case ModelVariant::Unfactorized:
      return (2.0 * k4 + 45.0) / (30.0 * k2);
    case ModelVariant::FifthOnlyFactorized:
      if (alpha != 1.0) throw ConfigError("the fifth-only factorized bound is defined for alpha = 1");
      return (2.0 * k4 + 15.0 * k2 + 45.0) / (10.0 * k4 + 30.0 * k2);
    case ModelVariant::FactorizedAll:
      return k2 * (alpha * ((alpha - 1.0) * k2 + 15.0 * alpha - 12.0) + 3.0) / 90.0 + (90.0 * alpha - 45.0) / 90.0 +
             3.0 / (2.0 * k2);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Relation linearized_relation(ModelVariant variant) noexcept {
  switch (variant) {
    case ModelVariant::Unfactorized: return Relation::LinearizedUnfactorized;
    case ModelVariant::FifthOnlyFactorized: return Relation::LinearizedFifthOnly;
    case ModelVariant::FactorizedAll: return Relation::LinearizedFactorized;
  }
  return Relation::LinearizedFactorized;
}

}  // namespace boussinesq::dispersion
