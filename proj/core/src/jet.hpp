#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace boussinesq::detail {

// Truncated Taylor series c[n] = f^(n)(x0) / n!, n = 0..N-1.
template <std::size_t N>
struct Jet {
  std::array<double, N> c{};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  // The linear map x0 + slope * (x - x0) evaluated to value `v`.
  static Jet linear(double v, double slope) {
    Jet j;
    j.c[0] = v;
    if constexpr (N > 1) j.c[1] = slope;
    return j;
  }

  // n-th derivative at the expansion point.
  [[nodiscard]] double derivative(std::size_t n) const {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f * c[n];
  }

  friend Jet operator+(Jet a, const Jet& b) {
    for (std::size_t i = 0; i < N; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Jet operator-(Jet a, const Jet& b) {
    for (std::size_t i = 0; i < N; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Jet operator*(double s, Jet a) {
    for (double& x : a.c) x *= s;
    return a;
  }
  friend Jet operator+(double s, Jet a) {
    a.c[0] += s;
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t n = 0; n < N; ++n) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= n; ++j) acc += a.c[j] * b.c[n - j];
      r.c[n] = acc;
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    for (std::size_t n = 0; n < N; ++n) {
      double acc = a.c[n];
      for (std::size_t j = 0; j < n; ++j) acc -= q.c[j] * b.c[n - j];
      q.c[n] = acc / b.c[0];
    }
    return q;
  }
};

// exp of a jet that is linear in the expansion variable: e^{u0} (s d)^n / n!.
template <std::size_t N>
Jet<N> exp_linear(double u0, double slope) {
  Jet<N> j;
  double term = std::exp(u0);
  for (std::size_t n = 0; n < N; ++n) {
    j.c[n] = term;
    term *= slope / static_cast<double>(n + 1);
  }
  return j;
}

}  // namespace boussinesq::detail
