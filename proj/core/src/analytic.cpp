#include "boussinesq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "boussinesq/model.hpp"
#include "jet.hpp"

namespace boussinesq::analytic {

namespace {

using J6 = detail::Jet<6>;

// Right-moving base-wave jets in x at (t, x).
struct WaveJets {
  J6 zeta;
  J6 v;
};

WaveJets wave_jets(const SolitaryWaveSpec& s, double t, double x) {
  const double k = s.k();
  const double c = s.c();
  const double u = k * (x - s.x0 - c * t);
  // sech^2(u) = 4 e / (1 + e)^2 with e = exp(-2|u|), expanded in x.
  const double sign = u >= 0.0 ? -2.0 : 2.0;
  const J6 e = detail::exp_linear<6>(sign * u, sign * k);
  const J6 one_plus = 1.0 + e;
  const J6 zeta = (4.0 * s.a) * (e / (one_plus * one_plus));
  const J6 v = (c * zeta) / (1.0 + s.epsilon * zeta);
  return {zeta, v};
}

double gaussian(double x, double center) {
  const double y = 3.0 * std::numbers::pi * (x - center) / 10.0;
  return std::exp(-y * y);
}

// Right-moving corrected solution.
WavePoint corrected_right(const SolitaryWaveSpec& spec, const CorrectionProfiles& p, double t, double x,
                          SimpsonOptions opts) {
  const WavePoint base = base_wave(spec, t, x);
  const double e2 = spec.epsilon * spec.epsilon;
  if (e2 == 0.0) return base;

  const double zm = p.zeta2(x - t), vm = p.v2(x - t);
  const double zp = p.zeta2(x + t), vp = p.v2(x + t);

  double i_plus = 0.0, i_minus = 0.0;
  if (t > 0.0) {
    const double step = std::min(opts.max_step, t / 10.0);
    auto m = static_cast<std::size_t>(std::ceil(t / step - 1e-12));
    if (m % 2 == 1) ++m;
    const double h = t / static_cast<double>(m);
    for (std::size_t j = 0; j <= m; ++j) {
      const double s = h * static_cast<double>(j);
      const double w = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      i_plus += w * corrector_source(spec, s, x - t + s);
      i_minus += w * corrector_source(spec, s, x + t - s);
    }
    i_plus *= h / 3.0;
    i_minus *= h / 3.0;
  }
  return {base.zeta + 0.5 * e2 * ((zm + vm) + (zp - vp) + i_plus - i_minus),
          base.v + 0.5 * e2 * ((zm + vm) - (zp - vp) + i_plus + i_minus)};
}

}  // namespace

void SolitaryWaveSpec::validate() const {
  if (!(a > 0.0)) throw ConfigError("solitary wave amplitude must be positive");
  if (!(epsilon >= 0.0 && a * epsilon < 1.0)) throw ConfigError("solitary wave needs 0 <= a eps < 1");
  if (direction != 1 && direction != -1) throw ConfigError("solitary wave direction must be +1 or -1");
}

double SolitaryWaveSpec::k() const { return std::sqrt(0.75 * a); }
double SolitaryWaveSpec::c() const { return std::sqrt(1.0 / (1.0 - a * epsilon)); }

WavePoint base_wave(const SolitaryWaveSpec& spec, double t, double x) {
  const double y = spec.direction == 1 ? x : 2.0 * spec.x0 - x;
  const double ch = std::cosh(spec.k() * (y - spec.x0 - spec.c() * t));
  const double zeta = spec.a / (ch * ch);
  const double v = spec.c() * zeta / (1.0 + spec.epsilon * zeta);
  return {zeta, spec.direction == 1 ? v : -v};
}

ProfileDerivatives base_wave_derivatives(const SolitaryWaveSpec& spec, double t, double x) {
  const WaveJets j = wave_jets(spec, t, x);
  ProfileDerivatives d;
  for (std::size_t n = 0; n < 6; ++n) {
    d.zeta[n] = j.zeta.derivative(n);
    d.v[n] = j.v.derivative(n);
  }
  return d;
}

double corrector_source(const SolitaryWaveSpec& spec, double t, double x) {
  const ProfileDerivatives d = base_wave_derivatives(spec, t, x);
  const double c = spec.c();
  const auto& z = d.zeta;
  const auto& v = d.v;
  return -c * (z[1] * v[2] + 2.0 / 3.0 * z[0] * v[3] + v[5] / 45.0) + (v[0] * v[3] - v[1] * v[2]) / 3.0;
}

CorrectionProfiles gaussian_correction(double center) {
  auto g = [center](double x) { return gaussian(x, center); };
  return {g, g};
}

CorrectionProfiles default_correction(const SolitaryWaveSpec& spec, CorrectorCenter center) {
  const double physical = center == CorrectorCenter::Wave ? spec.x0 : 0.0;
  // The left-moving solution is a mirror image about x0.
  return gaussian_correction(spec.direction == 1 ? physical : 2.0 * spec.x0 - physical);
}

WavePoint corrected_solution(const SolitaryWaveSpec& spec, const CorrectionProfiles& profiles, double t, double x,
                             SimpsonOptions opts) {
  spec.validate();
  if (t < 0.0) throw ConfigError("corrected solution needs t >= 0");
  if (spec.direction == 1) return corrected_right(spec, profiles, t, x, opts);
  SolitaryWaveSpec right = spec;
  right.direction = 1;
  const WavePoint r = corrected_right(right, profiles, t, 2.0 * spec.x0 - x, opts);
  return {r.zeta, -r.v};
}

Profile corrected_solution(const SolitaryWaveSpec& spec, const CorrectionProfiles& profiles, double t,
                           std::span<const double> x, SimpsonOptions opts) {
  Profile p;
  p.zeta.resize(x.size());
  p.v.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const WavePoint w = corrected_solution(spec, profiles, t, x[i], opts);
    p.zeta[i] = w.zeta;
    p.v[i] = w.v;
  }
  return p;
}

double heap_profile(HeapKind kind, double x) noexcept {
  const double width = kind == HeapKind::HighFreq ? 80.0 : 0.4;
  return 0.7 * std::exp(-width * x * x);
}

std::vector<double> heap_profile(HeapKind kind, std::span<const double> x) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [kind](double xi) { return heap_profile(kind, xi); });
  return out;
}

double dam_break_profile(double a, double x) noexcept { return a * (1.0 + std::tanh(250.0 - std::abs(x))); }

std::vector<double> dam_break_profile(double a, std::span<const double> x) {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [a](double xi) { return dam_break_profile(a, xi); });
  return out;
}

}  // namespace boussinesq::analytic
