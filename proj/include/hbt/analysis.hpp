#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbt/coherence.hpp"

namespace hbt {

/// Thresholds shared by feature extraction and strategy classification.
struct AnalysisOptions {
  /// Half-width of the band around gamma_inf that counts as the plateau.
  double plateau_tolerance = 1e-3;
  /// A fractional variation is appreciable above this (1%).
  double appreciability = 0.01;
};

/// Observable features of a coherence curve.
///
/// gamma_min/x_osc are absent when no appreciable oscillation minimum was
/// found; f_osc is then zero.
struct FeatureSet {
  std::optional<double> gamma_min;
  double gamma_inf = 1.5;
  std::optional<double> x_osc;
  double x_asy = 0.0;
  double f_osc = 0.0;
  double f_asy = 0.0;
  long long usable_minima = 0;
};

/// Single-disc coherence at `baseline` for the radius implied by x_asy.
double single_reference(double baseline, double x_asy);

/// 1 - gamma_min / gamma_single(x_osc), with the single-disc curve implied by x_asy.
double variation_osc_from_features(double gamma_min, double x_osc, double x_asy);

/// 2 gamma_inf / 3 - 1.
double variation_asy_from_features(double gamma_inf);

struct Geometry {
  double omega;     // rad/s
  double distance;  // m
};

/// Reads gamma_inf, the first oscillation minimum, and the plateau onset off
/// a sampled curve. Throws DomainError("plateau not reached") when the last
/// decade of baselines still moves by more than the plateau tolerance.
FeatureSet extract_features(const CoherenceCurve& curve, const Geometry& geometry,
                            const AnalysisOptions& options = {});

/// Closed-form features of a system (gamma_min from its small-R/d form).
FeatureSet forward_features(const BinarySystem& system, double frequency,
                            std::optional<double> alpha = std::nullopt);

/// Closed-form variations in the x_osc << x_asy regime.
double variation_osc(double s, double N);
double variation_asy(double s, double N);

/// True iff 1/10 < R_B/R_A < 10.
bool size_bound_check(double radius_a, double radius_b);

struct TemperatureBoundaries {
  double t_minus;
  double t_plus;
};

/// Temperatures of body B at which F_osc = F_asy, i.e. n_B = (4 -/+ sqrt 15) n_A.
TemperatureBoundaries decision_boundaries(double omega, double temperature_a);

enum class DominantFeature { oscillation, asymptotic, neither_appreciable };

const char* to_string(DominantFeature feature);

struct DecisionOutcome {
  DominantFeature dominant_feature;
  double t_minus;
  double t_plus;
  bool size_bound_ok;
  double f_osc;
  double f_asy;
  double N;
};

DecisionOutcome classify_strategy(const BinarySystem& system, double frequency,
                                  const AnalysisOptions& options = {});

struct EstimateOptions {
  /// Orbital phase at which the features were taken. Without it only the
  /// apparent separation d* is identifiable.
  std::optional<double> phase_angle;
  /// Temperature of body A; enables T_B per occupation branch.
  std::optional<double> temperature_a;
};

struct EstimateResult {
  double radius_a;
  double apparent_separation;
  std::optional<double> separation;
  std::pair<double, double> s_branches;  // (s <= 1, 1/s)
  std::pair<double, double> N_branches;  // (N <= 1, 1/N)
  /// T_B for each N branch, same order, when T_A was supplied.
  std::optional<std::pair<double, double>> temperature_b_branches;
  double selected_s;
  bool equilibrium;
  std::string selected_branch_rule;
  std::vector<std::string> notes;
};

/// Inverts (gamma_min, gamma_inf, x_osc, x_asy) at a known frequency and distance.
EstimateResult estimate_parameters(const FeatureSet& features, double omega, double distance,
                                   const EstimateOptions& options = {});

struct SweepPoint {
  double alpha;
  double ratio;  // gamma_binary(x; d*(alpha)) / gamma_single(x)
};

std::vector<SweepPoint> phase_angle_sweep(const BinarySystem& system, double frequency,
                                          double baseline, const std::vector<double>& alphas);

}  // namespace hbt
