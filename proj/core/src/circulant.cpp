#include "boussinesq/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "boussinesq/model.hpp"

namespace boussinesq {

PeriodicStencil::PeriodicStencil(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) throw ConfigError("stencil needs an odd, nonzero number of coefficients");
  radius_ = static_cast<int>(coeffs_.size() / 2);
}

PeriodicStencil PeriodicStencil::identity() { return PeriodicStencil(std::vector<double>{1.0}); }

double PeriodicStencil::coeff(int offset) const noexcept {
  if (offset < -radius_ || offset > radius_) return 0.0;
  return coeffs_[static_cast<std::size_t>(offset + radius_)];
}

void PeriodicStencil::apply(std::span<const double> in, std::span<double> out, double scale) const {
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  if (out.size() != in.size()) throw ConfigError("stencil apply: size mismatch");
  if (n < 2 * radius_ + 1) throw ConfigError("stencil apply: grid smaller than stencil width");
  const std::ptrdiff_t r = radius_;
  // Interior without wrap, then the 2r boundary rows with modular indices.
  for (std::ptrdiff_t i = r; i < n - r; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t k = -r; k <= r; ++k) acc += coeffs_[static_cast<std::size_t>(k + r)] * in[i + k];
    out[i] = scale * acc;
  }
  auto wrapped = [&](std::ptrdiff_t i) {
    double acc = 0.0;
    for (std::ptrdiff_t k = -r; k <= r; ++k) {
      std::ptrdiff_t j = (i + k) % n;
      if (j < 0) j += n;
      acc += coeffs_[static_cast<std::size_t>(k + r)] * in[j];
    }
    out[i] = scale * acc;
  };
  for (std::ptrdiff_t i = 0; i < std::min(r, n); ++i) wrapped(i);
  for (std::ptrdiff_t i = std::max(n - r, r); i < n; ++i) wrapped(i);
}

std::vector<double> PeriodicStencil::apply(std::span<const double> in, double scale) const {
  std::vector<double> out(in.size());
  apply(in, out, scale);
  return out;
}

std::complex<double> PeriodicStencil::symbol(double theta) const noexcept {
  std::complex<double> s{0.0, 0.0};
  for (int k = -radius_; k <= radius_; ++k) s += coeff(k) * std::polar(1.0, k * theta);
  return s;
}

PeriodicStencil PeriodicStencil::scaled(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& x : c) x *= factor;
  return PeriodicStencil(std::move(c));
}

PeriodicStencil operator+(const PeriodicStencil& a, const PeriodicStencil& b) {
  const int r = std::max(a.radius(), b.radius());
  std::vector<double> c(static_cast<std::size_t>(2 * r + 1));
  for (int k = -r; k <= r; ++k) c[static_cast<std::size_t>(k + r)] = a.coeff(k) + b.coeff(k);
  return PeriodicStencil(std::move(c));
}

namespace {

// In-place LU with partial pivoting of a small dense row-major matrix.
void dense_lu(std::vector<double>& a, std::vector<std::size_t>& piv, std::size_t m) {
  piv.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (std::abs(a[i * m + k]) > std::abs(a[p * m + k])) p = i;
    }
    piv[k] = p;
    if (a[p * m + k] == 0.0) throw NumericalError("singular capacitance matrix in cyclic solver");
    if (p != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[p * m + j]);
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      const double l = a[i * m + k] / a[k * m + k];
      a[i * m + k] = l;
      for (std::size_t j = k + 1; j < m; ++j) a[i * m + j] -= l * a[k * m + j];
    }
  }
}

void dense_lu_solve(const std::vector<double>& lu, const std::vector<std::size_t>& piv, std::size_t m,
                    std::span<double> b) {
  for (std::size_t k = 0; k < m; ++k) std::swap(b[k], b[piv[k]]);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) b[i] -= lu[i * m + j] * b[j];
  }
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = i + 1; j < m; ++j) b[i] -= lu[i * m + j] * b[j];
    b[i] /= lu[i * m + i];
  }
}

}  // namespace

CyclicBandedSolver::CyclicBandedSolver(const PeriodicStencil& stencil, std::size_t n) : n_(n), r_(stencil.radius()) {
  if (n < static_cast<std::size_t>(2 * r_ + 1)) throw ConfigError("cyclic solver: grid smaller than stencil width");

  double scale = 0.0;
  for (double c : stencil.coeffs()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw NumericalError("cyclic solver: zero operator");

  // Circulant eigenvalues are the symbol at the discrete frequencies.
  min_symbol_ = std::numeric_limits<double>::infinity();
  std::size_t worst = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    const double mod = std::abs(stencil.symbol(theta));
    if (mod < min_symbol_) {
      min_symbol_ = mod;
      worst = m;
    }
  }
  if (min_symbol_ <= 1e-13 * scale) {
    throw NumericalError("singular periodic operator: symbol vanishes at Fourier mode " + std::to_string(worst) +
                         " of " + std::to_string(n));
  }

  identity_ = (r_ == 0 && stencil.coeff(0) == 1.0);
  if (r_ == 0) {
    lu_ = {stencil.coeff(0)};
    return;
  }

  const std::size_t w = static_cast<std::size_t>(2 * r_ + 1);
  const auto r = static_cast<std::ptrdiff_t>(r_);
  const auto nn = static_cast<std::ptrdiff_t>(n);
  lu_.assign(n * w, 0.0);
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double& {
    return lu_[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j - i + r)];
  };
  for (std::ptrdiff_t i = 0; i < nn; ++i) {
    for (std::ptrdiff_t k = -r; k <= r; ++k) {
      const std::ptrdiff_t j = i + k;
      if (j >= 0 && j < nn) at(i, j) = stencil.coeff(static_cast<int>(k));
    }
  }
  for (std::ptrdiff_t k = 0; k < nn; ++k) {
    const double piv = at(k, k);
    if (std::abs(piv) <= 1e-14 * scale) throw NumericalError("cyclic solver: banded elimination broke down");
    for (std::ptrdiff_t i = k + 1; i <= std::min(nn - 1, k + r); ++i) {
      const double l = at(i, k) / piv;
      at(i, k) = l;
      for (std::ptrdiff_t j = k + 1; j <= std::min(nn - 1, k + r); ++j) at(i, j) -= l * at(k, j);
    }
  }

  // Corner rows/columns: first r and last r indices.
  const std::size_t m = static_cast<std::size_t>(2 * r_);
  corner_idx_.resize(m);
  for (std::size_t s = 0; s < static_cast<std::size_t>(r_); ++s) {
    corner_idx_[s] = s;
    corner_idx_[static_cast<std::size_t>(r_) + s] = n - static_cast<std::size_t>(r_) + s;
  }
  corner_m_.assign(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto i = static_cast<std::ptrdiff_t>(corner_idx_[a]);
      const auto j = static_cast<std::ptrdiff_t>(corner_idx_[b]);
      // Wrapped offset from i to j, only counted when the direct offset is outside the band.
      if (std::abs(j - i) <= r) continue;
      std::ptrdiff_t k = j - i;
      if (k > r) k -= nn;
      if (k < -r) k += nn;
      if (k >= -r && k <= r) corner_m_[a * m + b] = stencil.coeff(static_cast<int>(k));
    }
  }

  z_.assign(n * m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    std::span<double> col(z_.data() + b * n, n);
    col[corner_idx_[b]] = 1.0;
    banded_solve(col);
  }
  // Capacitance I + M (U^T Z).
  std::vector<double> utz(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) utz[a * m + b] = z_[b * n + corner_idx_[a]];
  }
  cap_lu_.assign(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    cap_lu_[a * m + a] = 1.0;
    for (std::size_t b = 0; b < m; ++b) {
      double acc = 0.0;
      for (std::size_t c = 0; c < m; ++c) acc += corner_m_[a * m + c] * utz[c * m + b];
      cap_lu_[a * m + b] += acc;
    }
  }
  dense_lu(cap_lu_, cap_piv_, m);
}

void CyclicBandedSolver::banded_solve(std::span<double> x) const {
  const std::size_t w = static_cast<std::size_t>(2 * r_ + 1);
  const auto r = static_cast<std::ptrdiff_t>(r_);
  const auto nn = static_cast<std::ptrdiff_t>(n_);
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    return lu_[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j - i + r)];
  };
  for (std::ptrdiff_t i = 1; i < nn; ++i) {
    double acc = x[i];
    for (std::ptrdiff_t k = std::max<std::ptrdiff_t>(0, i - r); k < i; ++k) acc -= at(i, k) * x[k];
    x[i] = acc;
  }
  for (std::ptrdiff_t i = nn - 1; i >= 0; --i) {
    double acc = x[i];
    for (std::ptrdiff_t j = i + 1; j <= std::min(nn - 1, i + r); ++j) acc -= at(i, j) * x[j];
    x[i] = acc / at(i, i);
  }
}

void CyclicBandedSolver::solve(std::span<const double> rhs, std::span<double> x) const {
  if (rhs.size() != n_ || x.size() != n_) throw ConfigError("cyclic solver: size mismatch");
  if (x.data() != rhs.data()) std::copy(rhs.begin(), rhs.end(), x.begin());
  if (identity_) return;
  if (r_ == 0) {
    for (double& xi : x) xi /= lu_[0];
    return;
  }
  banded_solve(x);
  const std::size_t m = corner_idx_.size();
  std::vector<double> c(m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    double acc = 0.0;
    for (std::size_t b = 0; b < m; ++b) acc += corner_m_[a * m + b] * x[corner_idx_[b]];
    c[a] = acc;
  }
  dense_lu_solve(cap_lu_, cap_piv_, m, c);
  for (std::size_t b = 0; b < m; ++b) {
    const double cb = c[b];
    if (cb == 0.0) continue;
    const double* zb = z_.data() + b * n_;
    for (std::size_t i = 0; i < n_; ++i) x[i] -= zb[i] * cb;
  }
}

std::vector<double> CyclicBandedSolver::solve(std::span<const double> rhs) const {
  std::vector<double> x(rhs.size());
  solve(rhs, x);
  return x;
}

}  // namespace boussinesq
