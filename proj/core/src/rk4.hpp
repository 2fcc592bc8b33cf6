#pragma once

#include <cstddef>

#include "boussinesq/model.hpp"

namespace boussinesq::detail {

// out = y + c * k, componentwise on both fields.
template <class State>
State axpy(const State& y, double c, const State& k) {
  State out = y;
  for (std::size_t i = 0; i < y.zeta.size(); ++i) {
    out.zeta[i] += c * k.zeta[i];
    out.v[i] += c * k.v[i];
  }
  return out;
}

// Classical four-stage Runge-Kutta for an autonomous rhs.
template <class State, class Rhs>
State rk4(const State& y, double dt, Rhs&& rhs) {
  const State k1 = rhs(y);
  const State k2 = rhs(axpy(y, 0.5 * dt, k1));
  const State k3 = rhs(axpy(y, 0.5 * dt, k2));
  const State k4 = rhs(axpy(y, dt, k3));
  State out = y;
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < y.zeta.size(); ++i) {
    out.zeta[i] += w * (k1.zeta[i] + 2.0 * k2.zeta[i] + 2.0 * k3.zeta[i] + k4.zeta[i]);
    out.v[i] += w * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
  }
  return out;
}

}  // namespace boussinesq::detail
