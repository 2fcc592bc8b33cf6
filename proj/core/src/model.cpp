#include "boussinesq/model.hpp"

#include <array>
#include <cmath>
#include <numeric>

namespace boussinesq {

void PhysParams::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (!(gravity > 0.0)) throw ConfigError("gravity must be positive");
  if (!(depth > 0.0)) throw ConfigError("depth must be positive");
}

std::string_view to_string(ModelVariant variant) {
  switch (variant) {
    case ModelVariant::FactorizedAll: return "factorized";
    case ModelVariant::Unfactorized: return "unfactorized";
    case ModelVariant::FifthOnlyFactorized: return "fifth_only";
  }
  return "unknown";
}

ModelVariant parse_variant(std::string_view name) {
  if (name == "factorized" || name == "FactorizedAll") return ModelVariant::FactorizedAll;
  if (name == "unfactorized" || name == "Unfactorized") return ModelVariant::Unfactorized;
  if (name == "fifth_only" || name == "FifthOnlyFactorized") return ModelVariant::FifthOnlyFactorized;
  throw ConfigError("unknown model variant '" + std::string(name) + "'");
}

void check_variant(ModelVariant variant, const PhysParams& params) {
  if (variant == ModelVariant::FifthOnlyFactorized && params.alpha != 1.0) {
    throw ConfigError("the fifth-only factorized variant is defined for alpha = 1 only");
  }
}

Grid::Grid(double x_min, double x_max, std::size_t n_cells)
    : x_min_(x_min), x_max_(x_max), n_(n_cells), dx_(0.0) {
  if (!(x_max > x_min)) throw ConfigError("grid requires x_max > x_min");
  if (n_cells < kMinCells) {
    throw ConfigError("grid needs at least " + std::to_string(kMinCells) + " cells, got " + std::to_string(n_cells));
  }
  dx_ = (x_max - x_min) / static_cast<double>(n_cells);
}

double Grid::cell_center(std::size_t i) const noexcept {
  return x_min_ + (static_cast<double>(i) + 0.5) * dx_;
}

double Grid::node(std::size_t j) const noexcept {
  return x_min_ + (static_cast<double>(j) + 1.0) * dx_;
}

std::vector<double> Grid::cell_centers() const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = cell_center(i);
  return x;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

std::size_t Grid::wrap(std::ptrdiff_t i) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(n_);
  auto r = i % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

Grid build_grid(double x_min, double x_max, std::size_t n_cells) { return Grid(x_min, x_max, n_cells); }

FieldPair::FieldPair(std::vector<double> z, std::vector<double> vel) : zeta(std::move(z)), v(std::move(vel)) {
  if (zeta.size() != v.size()) throw ConfigError("zeta and v must have equal length");
}

bool is_strictly_hyperbolic(std::span<const double> zeta, const PhysParams& params) noexcept {
  for (double z : zeta) {
    if (!(params.water_column(z) > 0.0)) return false;
  }
  return true;
}

double l2_norm(std::span<const double> values) noexcept {
  double sum = 0.0;
  for (double x : values) sum += x * x;
  return std::sqrt(sum);
}

double relative_l2_error(std::span<const double> numerical, std::span<const double> reference) {
  if (numerical.size() != reference.size()) throw ConfigError("relative_l2_error: length mismatch");
  const double ref_norm = l2_norm(reference);
  if (!(ref_norm > 0.0)) throw NumericalError("relative_l2_error: reference has zero norm");
  double sum = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double d = numerical[i] - reference[i];
    sum += d * d;
  }
  return std::sqrt(sum) / ref_norm;
}

std::vector<double> cell_averages(const Grid& grid, const std::function<double(double)>& fn) {
  // Gauss-Legendre nodes/weights on [-1, 1].
  static constexpr std::array<double, 4> nodes = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                                  0.8611363115940526};
  static constexpr std::array<double, 4> weights = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                                    0.3478548451374538};
  std::vector<double> out(grid.size());
  const double half = 0.5 * grid.dx();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xc = grid.cell_center(i);
    double acc = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) acc += weights[q] * fn(xc + half * nodes[q]);
    out[i] = 0.5 * acc;
  }
  return out;
}

}  // namespace boussinesq
