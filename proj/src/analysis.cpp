#include "hbt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/radiometry.hpp"
#include "hbt/specialfn.hpp"

namespace hbt {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt15 = std::sqrt(15.0);

double pair_weight(double r) { return r / ((1.0 + r) * (1.0 + r)); }

double contrast_squared(double N) {
  const double c = (1.0 - N) / (1.0 + N);
  return c * c;
}

// Vertex of the parabola through three samples, searched within [x0, x2].
ScalarMinimum refine_minimum(double x0, double y0, double x1, double y1, double x2, double y2) {
  const auto parabola = [=](double x) {
    const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
    return y0 * l0 + y1 * l1 + y2 * l2;
  };
  return minimize_scalar(parabola, x0, x2, 1e-12);
}

}  // namespace

double single_reference(double baseline, double x_asy) {
  detail::require(x_asy > 0.0, "x_asy must be positive");
  const double env = bessel_envelope(bessel_j1_first_zero() * baseline / x_asy);
  return 1.5 + 0.5 * env * env;
}

double variation_osc_from_features(double gamma_min_value, double x_osc, double x_asy) {
  return 1.0 - gamma_min_value / single_reference(x_osc, x_asy);
}

double variation_asy_from_features(double gamma_inf) { return 2.0 * gamma_inf / 3.0 - 1.0; }

FeatureSet extract_features(const CoherenceCurve& curve, const Geometry& geometry,
                            const AnalysisOptions& options) {
  const auto& x = curve.baselines;
  const auto& g = curve.gamma2;
  detail::require(x.size() == g.size(), "curve columns differ in length");
  detail::require(x.size() >= 3, "curve too short: plateau not reached");
  detail::require(geometry.omega > 0.0 && geometry.distance > 0.0,
                  "geometry must have positive omega and distance");
  const std::size_t n = x.size();

  // Plateau: the last decade of baselines.
  const double decade_start = x.back() / 10.0;
  const auto first_tail =
      static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), decade_start) - x.begin());
  if (n - first_tail < 2) throw DomainError("curve too short: plateau not reached");
  const auto [lo_it, hi_it] = std::minmax_element(g.begin() + first_tail, g.end());
  if (*hi_it - *lo_it >= options.plateau_tolerance) {
    throw DomainError("plateau not reached: last decade varies by " +
                      std::to_string(*hi_it - *lo_it));
  }

  FeatureSet features;
  features.gamma_inf =
      std::accumulate(g.begin() + first_tail, g.end(), 0.0) / static_cast<double>(n - first_tail);

  // Plateau onset: first entry into the band that is never left again.
  const double band = options.plateau_tolerance;
  std::size_t last_outside = n;
  for (std::size_t i = n; i-- > 0;) {
    if (std::abs(g[i] - features.gamma_inf) >= band) {
      last_outside = i;
      break;
    }
  }
  if (last_outside == n) {
    features.x_asy = x.front();
  } else {
    const std::size_t i = last_outside;
    const double target =
        g[i] > features.gamma_inf ? features.gamma_inf + band : features.gamma_inf - band;
    const double t = (g[i] - target) / (g[i] - g[i + 1]);
    features.x_asy = x[i] + std::clamp(t, 0.0, 1.0) * (x[i + 1] - x[i]);
  }
  detail::require(features.x_asy > 0.0, "curve is flat from the first baseline");

  // First interior minimum ahead of the plateau, kept only if the rise to the
  // following maximum is appreciable.
  for (std::size_t i = 1; i + 1 < n && x[i] < features.x_asy; ++i) {
    if (!(g[i] < g[i - 1] && g[i] <= g[i + 1])) continue;
    std::size_t peak = i + 1;
    while (peak + 1 < n && g[peak + 1] >= g[peak]) ++peak;
    const ScalarMinimum refined = refine_minimum(x[i - 1], g[i - 1], x[i], g[i], x[i + 1], g[i + 1]);
    if (1.0 - refined.value / g[peak] >= options.appreciability) {
      features.gamma_min = refined.value;
      features.x_osc = refined.x;
    }
    break;
  }

  features.f_asy = variation_asy_from_features(features.gamma_inf);
  if (features.gamma_min) {
    const double radius_a =
        bessel_j1_first_zero() * kConstants.c * geometry.distance / (geometry.omega * features.x_asy);
    features.f_osc =
        1.0 - *features.gamma_min /
                  gamma2_single(*features.x_osc, radius_a, geometry.distance, geometry.omega);
    features.usable_minima = minima_count(*features.x_osc, features.x_asy);
  }
  return features;
}

FeatureSet forward_features(const BinarySystem& system, double frequency,
                            std::optional<double> alpha) {
  const double omega = angular_frequency(frequency);
  const DerivedRatios r = derived_ratios(system, frequency);
  const double D = system.observer_distance();
  const double d_eff =
      alpha ? std::abs(apparent_separation(system.separation(), *alpha, D)) : system.separation();
  FeatureSet features;
  features.gamma_inf = gamma_infinity(r.s, r.N);
  features.x_asy = baseline_asy(omega, D, system.body_a().radius);
  features.f_asy = variation_asy_from_features(features.gamma_inf);
  if (d_eff > 0.0) {
    features.gamma_min = gamma_min(r.s, r.N);
    features.x_osc = baseline_osc(omega, D, d_eff);
    features.f_osc = variation_osc_from_features(*features.gamma_min, *features.x_osc, features.x_asy);
    features.usable_minima = minima_count(*features.x_osc, features.x_asy);
  }
  return features;
}

double variation_osc(double s, double N) {
  detail::require(s > 0.0 && N > 0.0, "s and N must be positive");
  return 4.0 * pair_weight(s) * pair_weight(N);
}

double variation_asy(double s, double N) {
  detail::require(s > 0.0 && N > 0.0, "s and N must be positive");
  return 2.0 / 3.0 * pair_weight(s) * contrast_squared(N);
}

bool size_bound_check(double radius_a, double radius_b) {
  detail::require(radius_a > 0.0 && radius_b > 0.0, "radii must be positive");
  const double ratio = radius_b / radius_a;
  return ratio > 0.1 && ratio < 10.0;
}

TemperatureBoundaries decision_boundaries(double omega, double temperature_a) {
  detail::require(omega > 0.0, "angular frequency must be positive");
  const double frequency = omega / (2.0 * kPi);
  const Occupation na = mean_photon_number(frequency, temperature_a);
  const auto scaled = [&](double factor) {
    Occupation o;
    o.log_n_bar = na.log_n_bar + std::log(factor);
    o.n_bar = std::exp(o.log_n_bar);
    return temperature_from_occupation(frequency, o);
  };
  return {scaled(4.0 - kSqrt15), scaled(4.0 + kSqrt15)};
}

const char* to_string(DominantFeature feature) {
  switch (feature) {
    case DominantFeature::oscillation:
      return "oscillation";
    case DominantFeature::asymptotic:
      return "asymptotic";
    case DominantFeature::neither_appreciable:
      return "neither_appreciable";
  }
  return "unknown";
}

DecisionOutcome classify_strategy(const BinarySystem& system, double frequency,
                                  const AnalysisOptions& options) {
  const DerivedRatios r = derived_ratios(system, frequency);
  const TemperatureBoundaries bounds =
      decision_boundaries(angular_frequency(frequency), system.body_a().temperature);
  DecisionOutcome out{};
  out.t_minus = bounds.t_minus;
  out.t_plus = bounds.t_plus;
  out.size_bound_ok = size_bound_check(system.body_a().radius, system.body_b().radius);
  out.f_osc = variation_osc(r.s, r.N);
  out.f_asy = variation_asy(r.s, r.N);
  out.N = r.N;
  if (out.f_osc < options.appreciability && out.f_asy < options.appreciability) {
    out.dominant_feature = DominantFeature::neither_appreciable;
  } else if (r.N > 4.0 - kSqrt15 && r.N < 4.0 + kSqrt15) {
    out.dominant_feature = DominantFeature::oscillation;
  } else {
    out.dominant_feature = DominantFeature::asymptotic;
  }
  return out;
}

EstimateResult estimate_parameters(const FeatureSet& features, double omega, double distance,
                                   const EstimateOptions& options) {
  detail::require(omega > 0.0 && distance > 0.0, "omega and distance must be positive");
  if (!features.gamma_min || !features.x_osc) {
    throw EstimationError("no oscillation signal: features carry no first minimum");
  }
  detail::require(features.x_asy > 0.0 && *features.x_osc > 0.0,
                  "feature baselines must be positive");
  constexpr double kSlack = 1e-12;
  if (features.gamma_inf < 1.5 - kSlack || features.gamma_inf > 1.75 + kSlack) {
    throw EstimationError("infeasible features: gamma_inf outside [3/2, 7/4]");
  }
  const double a = std::max(0.0, features.gamma_inf - 1.5);
  const double b = (2.0 - *features.gamma_min) / 8.0;
  if (!(b > 0.0)) throw EstimationError("no oscillation signal: gamma_min >= 2");

  EstimateResult out{};
  // N^2 - (2 + a/b) N + 1 = 0, roots reciprocal.
  const double r = a / b;
  const double n_large = 0.5 * ((2.0 + r) + std::sqrt(r * (4.0 + r)));
  out.N_branches = {1.0 / n_large, n_large};
  out.equilibrium = r < 1e-12;

  // s/(1+s)^2 = b (1+N)^2 / N, identical for both N branches.
  const double sigma = b / pair_weight(n_large);
  if (sigma > 0.25 + kSlack) {
    throw EstimationError("infeasible features: implied s/(1+s)^2 exceeds 1/4");
  }
  const double p = 1.0 / std::min(sigma, 0.25) - 2.0;
  const double s_large = 0.5 * (p + std::sqrt(std::max(0.0, p * p - 4.0)));
  out.s_branches = {1.0 / s_large, s_large};
  out.selected_s = out.s_branches.first;
  out.selected_branch_rule =
      "s <= 1 (body A is the larger disc); N and 1/N are observationally equivalent";

  const double u1 = bessel_j1_first_zero();
  out.radius_a = u1 * kConstants.c * distance / (omega * features.x_asy);
  out.apparent_separation = kPi * kConstants.c * distance / (omega * *features.x_osc);
  if (options.phase_angle) {
    const double sin_alpha = std::sin(*options.phase_angle);
    if (std::abs(sin_alpha) < 1e-12) {
      throw EstimationError("phase angle aligns the pair with the line of sight");
    }
    out.separation = distance * std::sin(std::atan(out.apparent_separation / distance)) /
                     std::abs(sin_alpha);
  } else {
    out.notes.push_back("phase angle unknown: only the apparent separation d* is identifiable");
  }
  if (out.equilibrium) {
    out.notes.push_back("equilibrium (N = 1): temperatures unresolved individually");
  }

  if (options.temperature_a) {
    const double frequency = omega / (2.0 * kPi);
    const Occupation na = mean_photon_number(frequency, *options.temperature_a);
    const auto tb = [&](double N) {
      Occupation nb;
      nb.log_n_bar = na.log_n_bar + std::log(N);
      nb.n_bar = std::exp(nb.log_n_bar);
      return temperature_from_occupation(frequency, nb);
    };
    out.temperature_b_branches = std::make_pair(tb(out.N_branches.first), tb(out.N_branches.second));
  }
  return out;
}

std::vector<SweepPoint> phase_angle_sweep(const BinarySystem& system, double frequency,
                                          double baseline, const std::vector<double>& alphas) {
  detail::require(baseline > 0.0, "sweep baseline must be positive");
  std::vector<SweepPoint> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    const BinaryCoherence model(system, frequency, alpha);
    out.push_back({alpha, model(baseline) / model.single(baseline)});
  }
  return out;
}

}  // namespace hbt
