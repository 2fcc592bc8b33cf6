#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace boussinesq::analytic {

/// zeta1 = a sech^2(k (x - x0 - c t)), k = sqrt(3a/4), c = sqrt(1/(1 - a eps)).
struct SolitaryWaveSpec {
  double a = 0.2;
  double epsilon = 0.01;
  double x0 = 0.0;
  int direction = 1;  ///< +1 right-moving, -1 left-moving

  /// Throws ConfigError unless 0 < a eps < 1, a > 0 and direction = +-1.
  void validate() const;
  [[nodiscard]] double k() const;
  [[nodiscard]] double c() const;
};

struct WavePoint {
  double zeta = 0.0;
  double v = 0.0;
};

/// Solitary solution of the standard Boussinesq system, v1 = c zeta1 / (1 + eps zeta1).
/// direction = -1 mirrors about x0 and negates v.
[[nodiscard]] WavePoint base_wave(const SolitaryWaveSpec& spec, double t, double x);

/// x-derivatives of order 0..5 of the right-moving base wave.
struct ProfileDerivatives {
  std::array<double, 6> zeta{};
  std::array<double, 6> v{};
};
[[nodiscard]] ProfileDerivatives base_wave_derivatives(const SolitaryWaveSpec& spec, double t, double x);

/// Source of the second-order corrector for the right-moving wave,
/// f = zeta1_x v1_xt + (2/3) zeta1 v1_xxt + (1/45) v1_xxxxt + (1/3) (v1 v1_xx - v1_x^2)_x,
/// with d/dt = -c d/dx on the travelling profile.
[[nodiscard]] double corrector_source(const SolitaryWaveSpec& spec, double t, double x);

/// Initial corrector profiles (zeta2^0, v2^0), given in the frame of the
/// right-moving wave.
struct CorrectionProfiles {
  std::function<double(double)> zeta2;
  std::function<double(double)> v2;
};

/// exp(-(3 pi (x - center) / 10)^2) for both components.
[[nodiscard]] CorrectionProfiles gaussian_correction(double center);

enum class CorrectorCenter {
  Wave,   ///< Gaussian centered on the initial crest x0
  Origin  ///< Gaussian centered at x = 0
};

/// Gaussian profiles for `spec`, placed so that a left-moving wave carries
/// its corrector at the requested physical location.
[[nodiscard]] CorrectionProfiles default_correction(const SolitaryWaveSpec& spec, CorrectorCenter center);

/// Characteristic integrals use composite Simpson with step min(max_step, t / 10).
struct SimpsonOptions {
  double max_step = 0.05;
};

/// Base wave plus the eps^2 corrector built from unit-speed characteristics.
/// direction = -1 returns the reflection about x0 of the right-moving result.
[[nodiscard]] WavePoint corrected_solution(const SolitaryWaveSpec& spec, const CorrectionProfiles& profiles, double t,
                                           double x, SimpsonOptions opts = {});

struct Profile {
  std::vector<double> zeta;
  std::vector<double> v;
};
[[nodiscard]] Profile corrected_solution(const SolitaryWaveSpec& spec, const CorrectionProfiles& profiles, double t,
                                         std::span<const double> x, SimpsonOptions opts = {});

enum class HeapKind {
  HighFreq,  ///< 0.7 exp(-80 x^2)
  LowFreq    ///< 0.7 exp(-0.4 x^2)
};
[[nodiscard]] double heap_profile(HeapKind kind, double x) noexcept;
[[nodiscard]] std::vector<double> heap_profile(HeapKind kind, std::span<const double> x);

/// a (1 + tanh(250 - |x|)).
[[nodiscard]] double dam_break_profile(double a, double x) noexcept;
[[nodiscard]] std::vector<double> dam_break_profile(double a, std::span<const double> x);

}  // namespace boussinesq::analytic
