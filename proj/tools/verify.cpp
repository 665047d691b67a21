#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hbt/catalog.hpp"
#include "hbt/coherence.hpp"
#include "hbt/oracle.hpp"

namespace hbt::cli {
namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace

SuiteResult verify_determinant(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kCases = 100;
  constexpr double kTol = 1e-10;
  int passed = 0;
  double worst = 0.0;
  for (int i = 0; i < kCases; ++i) {
    const double n1 = log_uniform(rng, 1e-2, 1e2);
    const double n2 = log_uniform(rng, 1e-2, 1e2);
    // A_ll below 1/n_l keeps each diagonal block positive; |A12| below the
    // geometric mean keeps the whole form positive definite.
    const double a11 = (1.0 / n1) * (2.0 * unit(rng) - 1.0) * 0.95;
    const double a22 = (1.0 / n2) * (2.0 * unit(rng) - 1.0) * 0.95;
    const double bound = std::sqrt((1.0 / n1 - a11) * (1.0 / n2 - a22));
    const double mag = bound * 0.95 * unit(rng);
    const double arg = 2.0 * std::numbers::pi * unit(rng);
    const auto check = gaussian_determinant_identity(a11, a22, std::polar(mag, arg), n1, n2);
    const double rel = std::abs(check.lhs - check.rhs) / std::abs(check.rhs);
    worst = std::max(worst, rel);
    if (rel <= kTol) ++passed;
  }
  nlohmann::ordered_json d;
  d["seed"] = seed;
  d["cases"] = kCases;
  d["passed_cases"] = passed;
  d["tolerance_relative"] = kTol;
  d["max_relative_error"] = worst;
  return {"determinant", passed == kCases, d};
}

SuiteResult verify_mc(std::uint64_t seed, std::uint64_t samples, unsigned workers) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
  constexpr int kConfigs = 50;
  constexpr int kRequired = 47;
  constexpr double kSigmas = 4.0;
  int within = 0;
  double worst_z = 0.0;
  nlohmann::ordered_json configs = nlohmann::ordered_json::array();
  for (int i = 0; i < kConfigs; ++i) {
    const double n1 = log_uniform(rng, 1e-3, 10.0);
    const double n2 = log_uniform(rng, 1e-3, 10.0);
    const double phase = phase_dist(rng);
    McConfig cfg;
    cfg.samples = samples;
    cfg.seed = rng();
    cfg.workers = workers;
    const McEstimate est = mc_gamma2_two_sources(n1, n2, phase, cfg);
    const double closed = gamma2_two_sources(n2 / n1, phase);
    const double z = std::abs(est.gamma2_hat - closed) / est.std_error;
    worst_z = std::max(worst_z, z);
    if (z <= kSigmas) ++within;
    nlohmann::ordered_json c;
    c["n1"] = n1;
    c["n2"] = n2;
    c["phase_rad"] = phase;
    c["seed"] = cfg.seed;
    c["mc"] = est.gamma2_hat;
    c["std_error"] = est.std_error;
    c["closed_form"] = closed;
    c["z"] = z;
    configs.push_back(c);
  }
  nlohmann::ordered_json d;
  d["seed"] = seed;
  d["samples"] = samples;
  d["configurations"] = kConfigs;
  d["within_4_sigma"] = within;
  d["required"] = kRequired;
  d["max_z"] = worst_z;
  d["checks"] = configs;
  return {"mc", within >= kRequired, d};
}

SuiteResult verify_quadrature() {
  constexpr double kFrequency = 600e12;
  constexpr int kPoints = 20;
  constexpr double kTol = 1e-6;
  const Catalog cat = Catalog::builtin();
  bool ok = true;
  nlohmann::ordered_json systems = nlohmann::ordered_json::array();
  for (const auto& entry : cat.entries()) {
    const BinarySystem sys = entry.to_system();
    const double x_asy = baseline_asy(angular_frequency(kFrequency), sys.observer_distance(),
                                      sys.body_a().radius);
    double worst = 0.0;
    for (int i = 0; i < kPoints; ++i) {
      const double x = 2.0 * x_asy * i / (kPoints - 1);
      const double quad = quadrature_gamma2_binary(sys, kFrequency, x).value;
      worst = std::max(worst, std::abs(quad - gamma2_binary(x, sys, kFrequency)));
    }
    ok = ok && worst < kTol;
    nlohmann::ordered_json s;
    s["system"] = entry.name;
    s["frequency_hz"] = kFrequency;
    s["points"] = kPoints;
    s["max_abs_deviation"] = worst;
    systems.push_back(s);
  }
  nlohmann::ordered_json d;
  d["tolerance_abs"] = kTol;
  d["systems"] = systems;
  return {"quadrature", ok, d};
}

}  // namespace hbt::cli
