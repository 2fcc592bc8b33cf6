// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "boussinesq/analytic.hpp"
#include "boussinesq/dispersion.hpp"
#include "boussinesq/dispersive.hpp"
#include "boussinesq/scenario.hpp"
#include "boussinesq/splitting.hpp"
#include "oracles.hpp"

using namespace boussinesq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[192];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

dispersion::DispersionModel rest_model(dispersion::Relation r, double alpha) {
  dispersion::DispersionModel m;
  m.relation = r;
  m.params.epsilon = 1.0;
  m.params.alpha = alpha;
  return m;
}

constexpr ModelVariant kVariants[] = {ModelVariant::FactorizedAll, ModelVariant::Unfactorized,
                                      ModelVariant::FifthOnlyFactorized};

// 1. Optimal dispersion parameter.
Outcome alpha_optimization() {
  Outcome o;
  const auto a1 = dispersion::optimize_alpha(rest_model(dispersion::Relation::EbUnfactorized, 1.0), 1.0);
  const auto a10 = dispersion::optimize_alpha(rest_model(dispersion::Relation::EbFactorized, 1.0), 10.0);
  o.require(std::abs(a1.alpha - 0.8351) <= 0.005, fmt("alpha*(K=1) = %.4f (0.8351 +- 0.005)", a1.alpha));
  o.require(std::abs(a10.alpha - 1.0555) <= 0.02, fmt("alpha*(K=10) = %.4f (1.0555 +- 0.02)", a10.alpha));
  return o;
}

// 2. k^6 coefficient equals the Stokes value exactly when alpha = 1.
Outcome taylor_equivalence() {
  Outcome o;
  const double target = 2.0 / 15.0;
  for (auto r : {dispersion::Relation::EbUnfactorized, dispersion::Relation::EbFactorized}) {
    const auto m = rest_model(r, 1.0);
    const double c6 = dispersion::taylor_coefficients(m).c6;
    o.require(std::abs(c6 - target) <= 1e-10,
              std::string(dispersion::to_string(r)) + fmt(" c6 - 2/15 = %.1e", c6 - target));
    // Independent Richardson estimate from omega^2 itself.
    auto q = [&](double k) { return (dispersion::omega_squared(m, k) / (k * k) - 1.0 + k * k / 3.0) / std::pow(k, 4); };
    const double fit = (4.0 * q(0.01) - q(0.02)) / 3.0;
    o.require(std::abs(fit - target) <= 1e-5, fmt("fitted c6 = %.8f", fit));
  }
  for (double a : {0.8, 0.8351, 1.2}) {
    const double c6 = dispersion::taylor_coefficients(rest_model(dispersion::Relation::EbUnfactorized, a)).c6;
    o.require(std::abs(c6 - target) > 1e-4, fmt("alpha = %.4f: c6 = %.6f differs", a, c6));
  }
  return o;
}

// 3. Sign of omega^2 flips at the closed-form stability bounds.
Outcome stability_thresholds() {
  Outcome o;
  double worst = 0.0;
  bool signs = true;
  for (auto variant : kVariants) {
    for (double k : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      auto m = rest_model(dispersion::linearized_relation(variant), 1.0);
      auto w2 = [&](double zb) {
        m.background.zeta = zb;
        return dispersion::omega_squared(m, k);
      };
      const double bound = dispersion::stability_bound(variant, k, 1.0);
      double lo = 0.0, hi = 1e4;
      if (!(w2(lo) > 0.0 && w2(hi) < 0.0)) signs = false;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (w2(mid) > 0.0 ? lo : hi) = mid;
      }
      worst = std::max(worst, std::abs(0.5 * (lo + hi) - bound));
      for (double f : {0.0, 0.25, 0.5, 0.9, 1.0 - 1e-9}) signs = signs && w2(f * bound) > 0.0;
      for (double f : {1.0 + 1e-9, 1.1, 2.0, 10.0}) signs = signs && w2(f * bound) < 0.0;
    }
  }
  o.require(worst <= 1e-8, fmt("max |root - bound| = %.1e over 15 (variant, k) pairs", worst));
  o.require(signs, "sign pattern on the zeta-bar grid");
  return o;
}

// 4. Spatial convergence against the corrected solitary wave.
Outcome convergence_study() {
  Outcome o;
  const std::vector<std::size_t> ns{400, 800, 1600, 3200, 6400};
  const auto rep = scenario::run_convergence(scenario::builtin_config("solitary_convergence"), ns);
  std::string rows;
  double e1600 = 0.0;
  for (const auto& r : rep.rows) {
    rows += (rows.empty() ? "" : " ") + fmt("%.2e", r.err_zeta);
    if (r.n == 1600) e1600 = r.err_zeta;
  }
  o.require(rep.monotone, "monotone errors (" + rows + ")");
  o.require(rep.slope_zeta >= 2.0 && rep.slope_zeta <= 2.7, fmt("slope %.3f in [2.0, 2.7]", rep.slope_zeta));
  o.require(e1600 >= 2.05e-4 / 5.0 && e1600 <= 2.05e-4 * 5.0, fmt("E(1600) = %.3e within 5x of 2.05e-4", e1600));
  return o;
}

// 5. Mass conservation and steady states.
Outcome conservation() {
  Outcome o;
  const ScenarioConfig c = scenario::builtin_config("heap_lf");
  const Grid grid = c.grid();
  const splitting::StrangSplitting scheme(grid, c.params, c.variant, c.step_options());
  splitting::RunState run = scheme.initial_state(scenario::initial_cells(c));
  const double m0 = run.diagnostics.mass;
  for (int i = 0; i < 1000; ++i) scheme.step(run, splitting::choose_dt(run.cells, c.params, grid.dx(), c.cfl));
  const double drift = std::abs(run.diagnostics.mass - m0) / std::abs(m0);
  o.require(drift <= 1e-11, fmt("relative mass drift %.1e over 1000 steps", drift));

  double worst = 0.0;
  for (double level : {0.0, 0.3}) {
    splitting::RunState flat = scheme.initial_state(
        CellState(std::vector<double>(grid.size(), level), std::vector<double>(grid.size(), 0.0)));
    const double dt = splitting::choose_dt(flat.cells, c.params, grid.dx(), c.cfl);
    for (int i = 0; i < 100; ++i) scheme.step(flat, dt);
    for (std::size_t j = 0; j < grid.size(); ++j)
      worst = std::max({worst, std::abs(flat.cells.zeta[j] - level), std::abs(flat.cells.v[j])});
  }
  o.require(worst <= 1e-13, fmt("steady-state deviation %.1e over 100 steps", worst));
  return o;
}

// 6. Dense-matrix oracles at N = 32.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  const std::size_t n = 32;
  const double dx = 0.25;
  const Grid grid(0.0, n * dx, n);
  for (auto variant : kVariants) {
    PhysParams p;
    p.epsilon = 0.3;
    p.alpha = variant == ModelVariant::FifthOnlyFactorized ? 1.0 : 1.1;
    const dispersive::DispersiveOperators ops(grid, p, variant);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      NodalState s(oracle::random_vector(rng, n, -0.3, 0.3), oracle::random_vector(rng, n, -0.3, 0.3));
      const auto expected = oracle::dispersive_rate(s.zeta, s.v, p, variant, dx);
      worst = std::max(worst, oracle::max_abs_diff(dispersive::dispersive_rhs(s, ops).v, expected) /
                                  std::max(1.0, oracle::max_abs(expected)));
    }
    o.require(worst <= 1e-12, std::string(to_string(variant)) + fmt(" rhs %.1e", worst));
  }
  const std::map<int, double> left{
      {-2, 1.0 / 30.0}, {-1, -13.0 / 60.0}, {0, 47.0 / 60.0}, {1, 9.0 / 20.0}, {2, -1.0 / 20.0}};
  std::map<int, double> right;
  for (const auto& [k, c] : left) right[-k] = c;
  for (auto bias : {splitting::Bias::Left, splitting::Bias::Right}) {
    const auto dense = oracle::periodic(n, bias == splitting::Bias::Left ? left : right);
    const splitting::ConversionOperator conv(n, bias);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const auto u = oracle::random_vector(rng, n, -1.0, 1.0);
      worst = std::max({worst, oracle::max_abs_diff(conv.to_nodal(u), oracle::mul(dense, u)),
                        oracle::max_abs_diff(conv.to_cells(u), oracle::solve(dense, u))});
    }
    o.require(worst <= 1e-12, std::string(bias == splitting::Bias::Left ? "left" : "right") + fmt(" map %.1e", worst));
  }
  return o;
}

// 7. High-frequency stability demonstration.
Outcome stability_demo() {
  Outcome o;
  for (const auto& r : scenario::stability_demo(scenario::builtin_config("stability_demo"))) {
    const std::string name(to_string(r.variant));
    if (r.variant == ModelVariant::FifthOnlyFactorized) {
      o.require(r.blew_up && r.blowup_time < 3.0 && r.max_amplitude > 10.0,
                name + fmt(" exceeds 10 at t = %.3f (max %.3g)", r.blowup_time, r.max_amplitude));
    } else {
      o.require(!r.blew_up && r.max_amplitude <= 1.5, name + fmt(" bounded, max %.4f", r.max_amplitude));
    }
  }
  return o;
}

// 8. Head-on collision of two solitary waves.
Outcome head_on() {
  Outcome o;
  const ScenarioConfig c = scenario::builtin_config("head_on");
  const auto res = scenario::run_scenario(c);
  if (res.blew_up) {
    o.require(false, "run failed: " + res.blowup_message);
    return o;
  }
  const auto& first = res.snapshots.front();
  const auto& last = res.snapshots.back();
  const double k1 = std::sqrt(0.75 * c.amplitude), k2 = std::sqrt(0.75 * c.amplitude2);
  const double c1 = std::sqrt(1.0 / (1.0 - c.amplitude * c.params.epsilon));
  const double c2 = std::sqrt(1.0 / (1.0 - c.amplitude2 * c.params.epsilon));
  const double t = last.t;
  auto crest = [&](const CellState& s, double guess) {
    return scenario::locate_crest(res.x, s.zeta, guess - 15.0, guess + 15.0);
  };
  const auto big0 = crest(first.cells, c.x0), small0 = crest(first.cells, c.x0_2);
  const auto big = crest(last.cells, c.x0 + c.direction * c1 * t);
  const auto small = crest(last.cells, c.x0_2 + c.direction2 * c2 * t);
  const double rb = big.amplitude / big0.amplitude - 1.0, rs = small.amplitude / small0.amplitude - 1.0;
  o.require(std::abs(rb) <= 0.05, fmt("large crest %.5f vs %.5f", big.amplitude, big0.amplitude));
  o.require(std::abs(rs) <= 0.05, fmt("small crest %.5f vs %.5f", small.amplitude, small0.amplitude));
  double tail = 0.0;
  for (std::size_t i = 0; i < res.x.size(); ++i) {
    if (std::abs(res.x[i] - big.position) <= 6.0 / k1 || std::abs(res.x[i] - small.position) <= 6.0 / k2) continue;
    tail = std::max(tail, std::abs(last.cells.zeta[i]));
  }
  const double ratio = tail / std::max(big.amplitude, small.amplitude);
  o.require(ratio >= 1e-4 && ratio <= 1e-1, fmt("tail/crest = %.2e in [1e-4, 1e-1]", ratio));
  return o;
}

// 9. Dam break: parity and dispersive shock trains.
Outcome dam_break() {
  Outcome o;
  ScenarioConfig c = scenario::builtin_config("dam_break");
  c.end_time = 20.0;
  c.output_times = {20.0};
  const auto res = scenario::run_scenario(c);
  if (res.blew_up) {
    o.require(false, "run failed: " + res.blowup_message);
    return o;
  }
  const auto& z = res.final_state.cells.zeta;
  const auto& v = res.final_state.cells.v;
  const std::size_t n = z.size();
  double ez = 0.0, ev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ez = std::max(ez, std::abs(z[i] - z[n - 1 - i]));
    ev = std::max(ev, std::abs(v[i] + v[n - 1 - i]));
  }
  ez /= oracle::max_abs(z);
  ev /= oracle::max_abs(v);
  o.require(ez <= 1e-6 && ev <= 1e-6, fmt("parity defects zeta %.1e, v %.1e", ez, ev));

  // Oscillations on the outward fronts: local maxima beyond the initial dam
  // edge whose drop to the higher adjacent minimum exceeds 0.1 mm.
  std::vector<std::size_t> minima;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (z[i] < z[i - 1] && z[i] <= z[i + 1]) minima.push_back(i);
  for (int side : {-1, 1}) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (!(side * res.x[i] > 250.0 && z[i] > z[i - 1] && z[i] >= z[i + 1])) continue;
      const auto r = std::upper_bound(minima.begin(), minima.end(), i);
      if (r == minima.begin() || r == minima.end()) continue;
      const double prominence = z[i] - std::max(z[*(r - 1)], z[*r]);
      if (prominence > 1e-4) ++count;
    }
    o.require(count >= 5, std::string(side < 0 ? "left" : "right") + fmt(" front maxima %.0f (>= 5)", count));
  }
  return o;
}

// 10. Observed orders of the stencils, the conversion map and the splitting.
Outcome stencil_orders() {
  Outcome o;
  for (int d = 1; d <= 5; ++d) {
    std::vector<double> h, err;
    for (std::size_t n : {16u, 32u, 64u, 128u}) {
      const double dx = 2.0 * std::numbers::pi / n;
      std::vector<double> f(n), exact(n);
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::sin(i * dx);
        exact[i] = std::sin(i * dx + d * std::numbers::pi / 2.0);
      }
      h.push_back(dx);
      err.push_back(
          oracle::max_abs_diff(dispersive::apply_stencil(dispersive::derivative_stencil(d), f, dx), exact));
    }
    const double p = oracle::observed_order(h, err);
    o.require(p >= 3.7, fmt("D%.0f %.2f", d, p));
  }
  {
    std::vector<double> h, err;
    for (std::size_t n : {16u, 32u, 64u, 128u}) {
      const double dx = 1.0 / n, k = 2.0 * std::numbers::pi;
      const splitting::ConversionOperator conv(n);
      std::vector<double> nodes(n);
      for (std::size_t i = 0; i < n; ++i) nodes[i] = std::sin(k * (i + 1) * dx);
      h.push_back(dx);
      err.push_back(oracle::max_abs_diff(conv.to_nodal(oracle::sine_averages(n, 0.0, dx, k)), nodes));
    }
    const double p = oracle::observed_order(h, err);
    o.require(p >= 4.7, fmt("conversion %.2f", p));
  }
  {
    ScenarioConfig c = scenario::builtin_config("solitary");
    c.n_cells = 800;
    c.end_time = 10.0;
    c.output_times.clear();
    auto run = [&](double dt) {
      ScenarioConfig r = c;
      r.dt = dt;
      return scenario::run_scenario(r).final_state.cells.zeta;
    };
    const auto ref = run(0.05 / 64.0);
    std::vector<double> h, err;
    for (double dt : {0.05, 0.025, 0.0125, 0.00625}) {
      h.push_back(dt);
      err.push_back(relative_l2_error(run(dt), ref));
    }
    const double p = oracle::observed_order(h, err);
    o.require(p >= 1.8, fmt("Strang %.2f", p));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "alpha optimization", alpha_optimization},
      {2, "Taylor equivalence at alpha = 1", taylor_equivalence},
      {3, "stability thresholds", stability_thresholds},
      {4, "solitary-wave convergence", convergence_study},
      {5, "conservation and steady states", conservation},
      {6, "dense oracle equivalence", oracle_equivalence},
      {7, "high-frequency stability demonstration", stability_demo},
      {8, "head-on collision", head_on},
      {9, "dam break", dam_break},
      {10, "stencil, conversion and splitting orders", stencil_orders},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
