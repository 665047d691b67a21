#pragma once

#include <optional>
#include <vector>

namespace hbt {

struct SourceBody {
  double radius;       // m
  double temperature;  // K
};

/// Two thermal discs seen from far away. Body A is always the larger one;
/// `swapped()` reports whether the caller's order was reversed to get there.
class BinarySystem {
 public:
  /// Far-field ratio D/d below which `far_field_warning()` is raised.
  static constexpr double kFarFieldRatio = 1e3;

  /// Validates and normalises. A separation of zero is accepted as the
  /// concentric limit; any other separation must exceed R_A + R_B.
  static BinarySystem create(SourceBody a, SourceBody b, double separation,
                             double observer_distance,
                             std::optional<double> orbital_period = std::nullopt);

  const SourceBody& body_a() const { return a_; }
  const SourceBody& body_b() const { return b_; }
  double separation() const { return d_; }
  double observer_distance() const { return D_; }
  std::optional<double> orbital_period() const { return period_; }
  bool swapped() const { return swapped_; }
  bool far_field_warning() const { return d_ > 0.0 && D_ / d_ < kFarFieldRatio; }

  /// Copy with a different centre separation (validated again).
  BinarySystem with_separation(double separation) const;

 private:
  BinarySystem() = default;
  SourceBody a_{};
  SourceBody b_{};
  double d_ = 0.0;
  double D_ = 0.0;
  std::optional<double> period_;
  bool swapped_ = false;
};

/// Surface ratio s = (R_B/R_A)^2 and occupation ratio N = n_B/n_A.
struct DerivedRatios {
  double s;
  double N;
};

DerivedRatios derived_ratios(const BinarySystem& system, double frequency);

double angular_frequency(double frequency);

/// Two thermal point sources: 2(1 + N/(1+N)^2 (cos(phase) - 1)).
double gamma2_two_sources(double occupation_ratio, double phase);

/// Single uniform disc of radius R.
double gamma2_single(double baseline, double radius, double distance, double omega);

/// Cross term gamma_ij = (1/2) * Env(k R_i) * Env(k R_j) with k = omega x/(c D);
/// equals 1/2 at x = 0.
double gamma2_cross_term(double baseline, double radius_i, double radius_j, double distance,
                         double omega);

/// Long-baseline plateau 3/2 + s/(1+s)^2 (1-N)^2/(1+N)^2.
double gamma_infinity(double s, double N);

/// First-minimum depth 2 - 8 s/(1+s)^2 N/(1+N)^2 (valid for R_i << d).
double gamma_min(double s, double N);

/// Oscillation baseline pi c D / (omega d).
double baseline_osc(double omega, double distance, double separation);

/// Decay baseline u1 c D / (omega R_A).
double baseline_asy(double omega, double distance, double radius_a);

struct LadderRung {
  int m;
  double baseline;
};

struct MinimaLadder {
  std::vector<LadderRung> rungs;
  /// Set when x_asy < x_osc: not even the first minimum survives the envelope.
  bool empty_guard = false;
};

/// Minima at (2m - 1) x_osc for m = 1 .. floor((1 + x_asy/x_osc)/2).
MinimaLadder minima_ladder(double x_osc, double x_asy);

/// Number of rungs without materialising them.
long long minima_count(double x_osc, double x_asy);

/// Projected separation d sin(a) / cos(asin(d/D sin(a))).
double apparent_separation(double separation, double alpha, double distance);

/// Binary-disc coherence evaluated at a fixed frequency and orbital phase.
/// Construction precomputes every baseline-independent factor.
class BinaryCoherence {
 public:
  BinaryCoherence(const BinarySystem& system, double frequency,
                  std::optional<double> alpha = std::nullopt);

  double operator()(double baseline) const;
  double single(double baseline) const;

  double s() const { return s_; }
  double N() const { return N_; }
  double omega() const { return omega_; }
  /// Separation actually used in the fringe term (d* when alpha is set).
  double effective_separation() const { return d_eff_; }
  double gamma_inf() const { return gamma_inf_; }

 private:
  double s_;
  double N_;
  double omega_;
  double d_eff_;
  double k_per_baseline_;  // omega / (c D)
  double radius_a_;
  double radius_b_;
  double gamma_inf_;
  double norm_;       // 1/(1+s)^2
  double cross_amp_;  // 8 N s / (1+N)^2
};

double gamma2_binary(double baseline, const BinarySystem& system, double frequency,
                     std::optional<double> alpha = std::nullopt);

struct CoherenceCurve {
  std::vector<double> baselines;
  std::vector<double> gamma2;
};

/// Evaluates gamma2_binary on caller-supplied ascending, non-negative baselines.
CoherenceCurve sample_curve(const BinarySystem& system, double frequency,
                            const std::vector<double>& baselines,
                            std::optional<double> alpha = std::nullopt);

}  // namespace hbt
