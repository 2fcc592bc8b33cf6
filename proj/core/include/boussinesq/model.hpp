#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boussinesq {

/// Invalid user input: bad grid, inconsistent parameters, malformed config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed (singular operator, non-finite values, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite values or runaway amplitudes during time stepping.
class BlowUpError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The water column h0 + eps * zeta became nonpositive somewhere.
class HyperbolicityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Physical parameters shared by every solver.
///
/// Nondimensional runs use g = h0 = 1 and the regime's epsilon; dimensional
/// runs set epsilon = 1 and provide physical gravity and depth. The flux and
/// the dispersive right-hand side are written once in terms of all four.
struct PhysParams {
  double epsilon = 0.1;
  double alpha = 1.0;
  double gravity = 1.0;
  double depth = 1.0;

  /// Throws ConfigError when any invariant is violated.
  void validate() const;

  /// Total water column h0 + eps * zeta.
  [[nodiscard]] double water_column(double zeta) const noexcept { return depth + epsilon * zeta; }

  bool operator==(const PhysParams&) const = default;
};

enum class ModelVariant {
  FactorizedAll,       ///< 2nd, 3rd and 5th zeta derivatives factorized through P_h
  Unfactorized,        ///< direct D3 / D5 stencils on zeta
  FifthOnlyFactorized  ///< only the 5th derivative factorized; alpha must be 1
};

[[nodiscard]] std::string_view to_string(ModelVariant variant);
/// Accepts "factorized", "unfactorized", "fifth_only" (and the enum spellings).
[[nodiscard]] ModelVariant parse_variant(std::string_view name);

/// Throws ConfigError if the variant cannot be used with these parameters.
void check_variant(ModelVariant variant, const PhysParams& params);

/// Uniform periodic grid. Cell i spans [x_min + i dx, x_min + (i+1) dx];
/// nodal unknown j sits on the interface x_min + (j+1) dx, so node N-1
/// coincides with x_max which is identified with x_min.
class Grid {
 public:
  Grid(double x_min, double x_max, std::size_t n_cells);

  [[nodiscard]] double x_min() const noexcept { return x_min_; }
  [[nodiscard]] double x_max() const noexcept { return x_max_; }
  [[nodiscard]] double length() const noexcept { return x_max_ - x_min_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double dx() const noexcept { return dx_; }

  [[nodiscard]] double cell_center(std::size_t i) const noexcept;
  [[nodiscard]] double node(std::size_t j) const noexcept;
  [[nodiscard]] std::vector<double> cell_centers() const;
  [[nodiscard]] std::vector<double> nodes() const;

  /// Periodic index (i + offset) mod N.
  [[nodiscard]] std::size_t wrap(std::ptrdiff_t i) const noexcept;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

/// The widest stencil (D5) spans 9 points; smaller grids are rejected.
inline constexpr std::size_t kMinCells = 8;

[[nodiscard]] Grid build_grid(double x_min, double x_max, std::size_t n_cells);

/// Two-field periodic data, used for both cell averages and nodal values.
struct FieldPair {
  std::vector<double> zeta;
  std::vector<double> v;

  FieldPair() = default;
  explicit FieldPair(std::size_t n) : zeta(n, 0.0), v(n, 0.0) {}
  FieldPair(std::vector<double> z, std::vector<double> vel);

  [[nodiscard]] std::size_t size() const noexcept { return zeta.size(); }
};

/// Finite-volume unknowns: cell averages.
struct CellState : FieldPair {
  using FieldPair::FieldPair;
};

/// Finite-difference unknowns: point values at the interfaces.
struct NodalState : FieldPair {
  using FieldPair::FieldPair;
};

/// True when h0 + eps * zeta > 0 everywhere. Pure query.
[[nodiscard]] bool is_strictly_hyperbolic(std::span<const double> zeta, const PhysParams& params) noexcept;

/// Unweighted discrete Euclidean norm.
[[nodiscard]] double l2_norm(std::span<const double> values) noexcept;

/// ||num - ref||_2 / ||ref||_2. Throws ConfigError on length mismatch and
/// NumericalError when the reference has zero norm.
[[nodiscard]] double relative_l2_error(std::span<const double> numerical, std::span<const double> reference);

/// Cell averages of a point function by 4-point Gauss-Legendre quadrature.
[[nodiscard]] std::vector<double> cell_averages(const Grid& grid, const std::function<double(double)>& fn);

}  // namespace boussinesq
