#include "hbt/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/radiometry.hpp"
#include "hbt/specialfn.hpp"

namespace hbt {
namespace {

constexpr double kPi = std::numbers::pi;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_body(const SourceBody& body) {
  detail::require(positive(body.radius), "body radius must be positive");
  detail::require(positive(body.temperature), "body temperature must be positive");
}

// 4 s/(1+s)^2 and friends are symmetric under s -> 1/s; writing them as
// s/(1+s)^2 directly is stable for every positive s.
double pair_weight(double r) { return r / ((1.0 + r) * (1.0 + r)); }

}  // namespace

BinarySystem BinarySystem::create(SourceBody a, SourceBody b, double separation,
                                  double observer_distance,
                                  std::optional<double> orbital_period) {
  require_body(a);
  require_body(b);
  detail::require(std::isfinite(separation) && separation >= 0.0,
                  "separation must be non-negative");
  detail::require(positive(observer_distance), "observer distance must be positive");
  detail::require(separation < observer_distance,
                  "separation must be smaller than the observer distance");
  if (orbital_period) detail::require(positive(*orbital_period), "orbital period must be positive");

  BinarySystem system;
  system.swapped_ = b.radius > a.radius;
  if (system.swapped_) std::swap(a, b);
  detail::require(separation == 0.0 || separation > a.radius + b.radius,
                  "bodies overlap: separation must exceed R_A + R_B");
  system.a_ = a;
  system.b_ = b;
  system.d_ = separation;
  system.D_ = observer_distance;
  system.period_ = orbital_period;
  return system;
}

BinarySystem BinarySystem::with_separation(double separation) const {
  BinarySystem copy = create(a_, b_, separation, D_, period_);
  copy.swapped_ = swapped_;
  return copy;
}

double angular_frequency(double frequency) {
  detail::require(positive(frequency), "frequency must be positive");
  return 2.0 * kPi * frequency;
}

DerivedRatios derived_ratios(const BinarySystem& system, double frequency) {
  const double ratio = system.body_b().radius / system.body_a().radius;
  const Occupation na = mean_photon_number(frequency, system.body_a().temperature);
  const Occupation nb = mean_photon_number(frequency, system.body_b().temperature);
  return {ratio * ratio, occupation_ratio(na, nb)};
}

double gamma2_two_sources(double occupation_ratio, double phase) {
  detail::require(positive(occupation_ratio), "occupation ratio must be positive");
  detail::require(std::isfinite(phase), "phase must be finite");
  return 2.0 * (1.0 + pair_weight(occupation_ratio) * (std::cos(phase) - 1.0));
}

double gamma2_single(double baseline, double radius, double distance, double omega) {
  detail::require(positive(radius), "radius must be positive");
  detail::require(positive(distance), "distance must be positive");
  detail::require(positive(omega), "angular frequency must be positive");
  detail::require(std::isfinite(baseline) && baseline >= 0.0, "baseline must be non-negative");
  const double env = bessel_envelope(omega * radius * baseline / (kConstants.c * distance));
  return 1.5 + 0.5 * env * env;
}

double gamma2_cross_term(double baseline, double radius_i, double radius_j, double distance,
                         double omega) {
  detail::require(positive(radius_i) && positive(radius_j), "radii must be positive");
  detail::require(positive(distance), "distance must be positive");
  detail::require(positive(omega), "angular frequency must be positive");
  detail::require(std::isfinite(baseline) && baseline >= 0.0, "baseline must be non-negative");
  const double k = omega * baseline / (kConstants.c * distance);
  return 0.5 * bessel_envelope(k * radius_i) * bessel_envelope(k * radius_j);
}

double gamma_infinity(double s, double N) {
  detail::require(positive(s), "surface ratio must be positive");
  detail::require(positive(N), "occupation ratio must be positive");
  const double contrast = (1.0 - N) / (1.0 + N);
  return 1.5 + pair_weight(s) * contrast * contrast;
}

double gamma_min(double s, double N) {
  detail::require(positive(s), "surface ratio must be positive");
  detail::require(positive(N), "occupation ratio must be positive");
  return 2.0 - 8.0 * pair_weight(s) * pair_weight(N);
}

double baseline_osc(double omega, double distance, double separation) {
  detail::require(positive(omega) && positive(distance) && positive(separation),
                  "baseline_osc requires positive arguments");
  return kPi * kConstants.c * distance / (omega * separation);
}

double baseline_asy(double omega, double distance, double radius_a) {
  detail::require(positive(omega) && positive(distance) && positive(radius_a),
                  "baseline_asy requires positive arguments");
  return bessel_j1_first_zero() * kConstants.c * distance / (omega * radius_a);
}

long long minima_count(double x_osc, double x_asy) {
  detail::require(positive(x_osc) && positive(x_asy), "ladder baselines must be positive");
  return static_cast<long long>(std::floor(0.5 * (1.0 + x_asy / x_osc)));
}

MinimaLadder minima_ladder(double x_osc, double x_asy) {
  MinimaLadder ladder;
  const long long count = minima_count(x_osc, x_asy);
  ladder.empty_guard = x_asy < x_osc;
  if (ladder.empty_guard) return ladder;
  ladder.rungs.reserve(static_cast<std::size_t>(count));
  for (long long m = 1; m <= count; ++m) {
    ladder.rungs.push_back({static_cast<int>(m), static_cast<double>(2 * m - 1) * x_osc});
  }
  return ladder;
}

double apparent_separation(double separation, double alpha, double distance) {
  detail::require(std::isfinite(separation) && separation >= 0.0,
                  "separation must be non-negative");
  detail::require(positive(distance), "distance must be positive");
  detail::require(separation < distance, "separation must be smaller than the distance");
  detail::require(std::isfinite(alpha) && alpha >= 0.0 && alpha < 2.0 * kPi,
                  "phase angle must lie in [0, 2 pi)");
  const double sin_alpha = std::sin(alpha);
  const double sin_phi = separation / distance * sin_alpha;
  // cos(asin(y)) = sqrt(1 - y^2)
  return separation * sin_alpha / std::sqrt((1.0 - sin_phi) * (1.0 + sin_phi));
}

BinaryCoherence::BinaryCoherence(const BinarySystem& system, double frequency,
                                 std::optional<double> alpha) {
  const DerivedRatios ratios = derived_ratios(system, frequency);
  s_ = ratios.s;
  N_ = ratios.N;
  omega_ = angular_frequency(frequency);
  d_eff_ = alpha ? apparent_separation(system.separation(), *alpha, system.observer_distance())
                 : system.separation();
  k_per_baseline_ = omega_ / (kConstants.c * system.observer_distance());
  radius_a_ = system.body_a().radius;
  radius_b_ = system.body_b().radius;
  gamma_inf_ = gamma_infinity(s_, N_);
  norm_ = 1.0 / ((1.0 + s_) * (1.0 + s_));
  cross_amp_ = 8.0 * s_ * pair_weight(N_);
}

double BinaryCoherence::operator()(double baseline) const {
  detail::require(std::isfinite(baseline) && baseline >= 0.0, "baseline must be non-negative");
  const double k = k_per_baseline_ * baseline;
  const double env_a = bessel_envelope(k * radius_a_);
  const double env_b = bessel_envelope(k * radius_b_);
  const double gamma_aa = 0.5 * env_a * env_a;
  const double gamma_bb = 0.5 * env_b * env_b;
  const double gamma_ab = 0.5 * env_a * env_b;
  const double fringe = std::cos(k * d_eff_);
  return gamma_inf_ + norm_ * (gamma_aa + s_ * s_ * gamma_bb + cross_amp_ * fringe * gamma_ab);
}

double BinaryCoherence::single(double baseline) const {
  detail::require(std::isfinite(baseline) && baseline >= 0.0, "baseline must be non-negative");
  const double env = bessel_envelope(k_per_baseline_ * baseline * radius_a_);
  return 1.5 + 0.5 * env * env;
}

double gamma2_binary(double baseline, const BinarySystem& system, double frequency,
                     std::optional<double> alpha) {
  return BinaryCoherence(system, frequency, alpha)(baseline);
}

CoherenceCurve sample_curve(const BinarySystem& system, double frequency,
                            const std::vector<double>& baselines,
                            std::optional<double> alpha) {
  for (std::size_t i = 0; i < baselines.size(); ++i) {
    detail::require(std::isfinite(baselines[i]) && baselines[i] >= 0.0,
                    "baselines must be non-negative");
    if (i > 0) detail::require(baselines[i] > baselines[i - 1], "baselines must be ascending");
  }
  const BinaryCoherence model(system, frequency, alpha);
  CoherenceCurve curve;
  curve.baselines = baselines;
  curve.gamma2.reserve(baselines.size());
  for (double x : baselines) curve.gamma2.push_back(model(x));
  return curve;
}

}  // namespace hbt
