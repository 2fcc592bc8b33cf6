#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace boussinesq {

/// Constant-coefficient periodic stencil: (A u)_i = sum_k c_k u_{i+k},
/// k = -radius..radius, indices taken mod N.
class PeriodicStencil {
 public:
  PeriodicStencil() = default;
  /// `coeffs` has length 2 * radius + 1, ordered from offset -radius upwards.
  explicit PeriodicStencil(std::vector<double> coeffs);

  static PeriodicStencil identity();

  [[nodiscard]] int radius() const noexcept { return radius_; }
  [[nodiscard]] double coeff(int offset) const noexcept;
  [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// out = scale * (A in). `out` must not alias `in`.
  void apply(std::span<const double> in, std::span<double> out, double scale = 1.0) const;
  [[nodiscard]] std::vector<double> apply(std::span<const double> in, double scale = 1.0) const;

  /// Fourier symbol sum_k c_k e^{i k theta}.
  [[nodiscard]] std::complex<double> symbol(double theta) const noexcept;

  [[nodiscard]] PeriodicStencil scaled(double factor) const;
  friend PeriodicStencil operator+(const PeriodicStencil& a, const PeriodicStencil& b);

 private:
  int radius_ = 0;
  std::vector<double> coeffs_{1.0};
};

/// Factorization of the N x N circulant matrix of a stencil, computed once
/// and reused for every right-hand side.
///
/// The circulant is split into its banded Toeplitz part T plus the wrap-around
/// corner blocks, A = T + U M U^T with U selecting the first and last `radius`
/// rows. T is factored by banded LU without pivoting (valid for the symmetric
/// positive definite and diagonally dominant operators used here); the corner
/// correction goes through a small dense capacitance system.
class CyclicBandedSolver {
 public:
  CyclicBandedSolver() = default;
  /// Throws NumericalError if the circulant is singular (reporting the Fourier
  /// mode whose symbol vanishes) or if the banded elimination breaks down.
  CyclicBandedSolver(const PeriodicStencil& stencil, std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// Solves A x = rhs. `x` may alias `rhs`.
  void solve(std::span<const double> rhs, std::span<double> x) const;
  [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;

  /// Smallest |symbol| over the N discrete frequencies.
  [[nodiscard]] double min_symbol_modulus() const noexcept { return min_symbol_; }

 private:
  void banded_solve(std::span<double> x) const;

  std::size_t n_ = 0;
  int r_ = 0;
  bool identity_ = true;
  // Banded LU of T, row-major n x (2r + 1); column r is the diagonal.
  std::vector<double> lu_;
  // Capacitance system.
  std::vector<std::size_t> corner_idx_;  // 2r selected rows
  std::vector<double> corner_m_;         // 2r x 2r
  std::vector<double> z_;                // n x 2r, T^{-1} U (column-major by column)
  std::vector<double> cap_lu_;           // 2r x 2r, LU of I + M U^T Z
  std::vector<std::size_t> cap_piv_;
  double min_symbol_ = 1.0;
};

}  // namespace boussinesq
