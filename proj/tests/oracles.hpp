#pragma once

// Dense reference implementations used as independent oracles. Matrices are
// assembled entry by entry from explicit coefficient tables and solved with
// Gaussian elimination, sharing no code with the banded/cyclic production paths.

#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "boussinesq/model.hpp"

namespace oracle {

struct Dense {
  std::size_t n = 0;
  std::vector<double> a;  // row-major

  explicit Dense(std::size_t size) : n(size), a(size * size, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static Dense identity(std::size_t size) {
    Dense m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

// Periodic matrix with entries offsets[k] / scale at column i + k.
inline Dense periodic(std::size_t n, const std::map<int, double>& offsets, double scale = 1.0) {
  Dense m(n);
  const auto ni = static_cast<long>(n);
  for (long i = 0; i < ni; ++i)
    for (const auto& [k, c] : offsets) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(((i + k) % ni + ni) % ni)) += c / scale;
  return m;
}

inline Dense add(const Dense& x, const Dense& y, double cy = 1.0) {
  Dense m(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i] + cy * y.a[i];
  return m;
}

inline std::vector<double> mul(const Dense& m, const std::vector<double>& x) {
  std::vector<double> y(m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> solve(Dense m, std::vector<double> b) {
  const std::size_t n = m.n;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m.at(r, c)) > std::abs(m.at(p, c))) p = r;
    if (m.at(p, c) == 0.0) throw std::runtime_error("oracle: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m.at(r, c) / m.at(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m.at(i, j) * x[j];
    x[i] = s / m.at(i, i);
  }
  return x;
}

// Finite-difference matrices typed from the textbook formulas.
inline Dense d1(std::size_t n, double h) { return periodic(n, {{-2, 1}, {-1, -8}, {1, 8}, {2, -1}}, 12 * h); }
inline Dense d2(std::size_t n, double h) {
  return periodic(n, {{-2, -1}, {-1, 16}, {0, -30}, {1, 16}, {2, -1}}, 12 * h * h);
}
inline Dense d3(std::size_t n, double h) {
  return periodic(n, {{-3, 1}, {-2, -8}, {-1, 13}, {1, -13}, {2, 8}, {3, -1}}, 8 * h * h * h);
}
inline Dense d4(std::size_t n, double h) {
  return periodic(n, {{-3, -1}, {-2, 12}, {-1, -39}, {0, 56}, {1, -39}, {2, 12}, {3, -1}}, 6 * std::pow(h, 4));
}
inline Dense d5(std::size_t n, double h) {
  return periodic(n, {{-4, 1}, {-3, -9}, {-2, 26}, {-1, -29}, {1, 29}, {2, -26}, {3, 9}, {4, -1}}, 6 * std::pow(h, 5));
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

inline double max_abs(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return x;
}

// Least-squares slope of log(err) against log(h).
inline double observed_order(const std::vector<double>& h, const std::vector<double>& err) {
  const double m = static_cast<double>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// Velocity rate of the dispersive sub-problem assembled with dense matrices.
inline std::vector<double> dispersive_rate(const std::vector<double>& zeta, const std::vector<double>& v,
                                           const boussinesq::PhysParams& p, boussinesq::ModelVariant variant,
                                           double h) {
  using boussinesq::ModelVariant;
  const std::size_t n = zeta.size();
  const double g = p.gravity, e = p.epsilon, e2 = e * e, a = p.alpha;
  const Dense D1 = d1(n, h), D2 = d2(n, h), D3 = d3(n, h), D4 = d4(n, h), D5 = d5(n, h);
  const Dense J = add(add(Dense::identity(n), D2, -e * a / 3.0), D4, e2 * a / 45.0);
  const Dense P = add(Dense::identity(n), D2, -e * a / 3.0);

  const auto dz = mul(D1, zeta);
  std::vector<double> bracket(n), gdz(n);
  for (std::size_t i = 0; i < n; ++i) {
    bracket[i] = g / a * dz[i];
    gdz[i] = g * dz[i];
  }
  if (variant == ModelVariant::Unfactorized) {
    const auto z5 = mul(D5, zeta), z3 = mul(D3, zeta), z2 = mul(D2, zeta);
    for (std::size_t i = 0; i < n; ++i)
      bracket[i] += e2 * g * (2.0 / 45.0 * z5[i] + 2.0 / 3.0 * zeta[i] * z3[i] + dz[i] * z2[i]);
  } else {
    const auto w = solve(P, gdz);
    const auto w4 = mul(D4, w);
    for (std::size_t i = 0; i < n; ++i) bracket[i] += 2.0 / 45.0 * e2 * w4[i];
    if (variant == ModelVariant::FactorizedAll) {
      const auto w2 = mul(D2, w), w1 = mul(D1, w);
      for (std::size_t i = 0; i < n; ++i) bracket[i] += e2 * (2.0 / 3.0 * zeta[i] * w2[i] + dz[i] * w1[i]);
    } else {
      const auto z3 = mul(D3, zeta), z2 = mul(D2, zeta);
      for (std::size_t i = 0; i < n; ++i) bracket[i] += e2 * g * (2.0 / 3.0 * zeta[i] * z3[i] + dz[i] * z2[i]);
    }
  }
  auto dv = mul(D1, v);
  for (double& x : dv) x *= x;
  const auto dsq = mul(D1, dv);
  for (std::size_t i = 0; i < n; ++i) bracket[i] += 2.0 / 3.0 * e2 * dsq[i];
  const auto inv = solve(J, bracket);
  std::vector<double> rate(n);
  for (std::size_t i = 0; i < n; ++i) rate[i] = g / a * dz[i] - inv[i];
  return rate;
}

// Cell averages of sin(k x) over the cells of [x_min, x_min + n h).
inline std::vector<double> sine_averages(std::size_t n, double x_min, double h, double k) {
  std::vector<double> avg(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = x_min + static_cast<double>(i) * h;
    avg[i] = (std::cos(k * l) - std::cos(k * (l + h))) / (k * h);
  }
  return avg;
}

}  // namespace oracle
