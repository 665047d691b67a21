#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/feasibility.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

hbt::InstrumentConfig half_metre_v_band() { return {0.6, 0.3, 1e9, 550e-9, 88e-9, 1.0}; }

hbt::OperatingPoint op() { return {kPi * 0.36, 0.3, 1e-4, 0.12, 1e9}; }

TEST(Instrument, Validation) {
  EXPECT_NO_THROW(hbt::validate(half_metre_v_band()));
  auto bad = half_metre_v_band();
  bad.quantum_efficiency = 1.2;
  EXPECT_THROW(hbt::validate(bad), hbt::DomainError);
  bad = half_metre_v_band();
  bad.attenuation_factor = 0.0;
  EXPECT_THROW(hbt::validate(bad), hbt::DomainError);
  bad = half_metre_v_band();
  bad.filter_bandwidth = -1.0;
  EXPECT_THROW(hbt::validate(bad), hbt::DomainError);
}

TEST(PhotonRate, FormulaTranscription) {
  const double flux = 1.3e-11;
  const auto inst = half_metre_v_band();
  const double hand = kPi * 0.36 * 0.3 * 88.0 * flux * 550e-9 / (hbt::kConstants.h * hbt::kConstants.c);
  EXPECT_NEAR(hbt::photon_rate(flux, inst), hand, 1e-12 * hand);
}

TEST(PhotonRate, Scaling) {
  auto inst = half_metre_v_band();
  const double base = hbt::photon_rate(1e-12, inst);
  inst.telescope_radius *= 2;
  EXPECT_NEAR(hbt::photon_rate(1e-12, inst), 4 * base, 1e-12 * base);
  inst = half_metre_v_band();
  inst.quantum_efficiency = 1e-300;
  EXPECT_LT(hbt::photon_rate(1e-12, inst), 1e-280);
  EXPECT_THROW(hbt::photon_rate(0.0, half_metre_v_band()), hbt::DomainError);
}

TEST(PhotonRate, AttenuationToTargetRate) {
  auto inst = half_metre_v_band();
  const double flux = 1.5e-11;
  inst.attenuation_factor = 2e3 / hbt::photon_rate(flux, inst);
  EXPECT_NEAR(hbt::attenuated_photon_rate(flux, inst), 2e3, 1e-9);
}

TEST(Snr, FormulaTranscription) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const hbt::OperatingPoint p{u(rng), u(rng) / 2, u(rng) * 1e-4, u(rng) / 4, u(rng) * 1e8};
    const double tau = u(rng) * 100;
    const double hand = p.area_geometric_mean * p.efficiency * p.photon_flux_per_hz *
                        p.gamma_excess * std::pow(p.electronic_bandwidth, 0.5) *
                        std::pow(tau / 2, 0.5);
    EXPECT_NEAR(hbt::snr_rms(p, tau), hand, 1e-12 * hand);
  }
}

TEST(Snr, SquareRootLaw) {
  const double one = hbt::snr_rms(op(), 1.0);
  EXPECT_NEAR(hbt::snr_rms(op(), 4.0), 2 * one, 1e-14 * one);
  for (int decade = -3; decade <= 3; ++decade) {
    const double tau = std::pow(10.0, decade);
    EXPECT_NEAR(hbt::snr_rms(op(), tau) / std::sqrt(tau), one, 1e-12 * one) << tau;
  }
}

TEST(Snr, ZeroExcessGivesZero) {
  auto p = op();
  p.gamma_excess = 0.0;
  EXPECT_EQ(hbt::snr_rms(p, 10.0), 0.0);
  p.gamma_excess = -0.01;
  EXPECT_THROW(hbt::snr_rms(p, 10.0), hbt::DomainError);
}

TEST(IntegrationTime, InverseOfSnr) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const hbt::OperatingPoint p{u(rng), u(rng) / 2, u(rng) * 1e-4, u(rng) / 4, u(rng) * 1e8};
    const double target = u(rng) * 50;
    const double tau = hbt::required_integration_time(target, p);
    EXPECT_NEAR(hbt::snr_rms(p, tau), target, 1e-9 * target);
  }
  const double t1 = hbt::required_integration_time(10.0, op());
  EXPECT_NEAR(hbt::required_integration_time(20.0, op()), 4 * t1, 1e-12 * t1);
}

TEST(IntegrationTime, ZeroExcessIsInfeasible) {
  auto p = op();
  p.gamma_excess = 0.0;
  try {
    hbt::required_integration_time(50.0, p);
    FAIL();
  } catch (const hbt::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("infeasible operating point"), std::string::npos);
  }
}

TEST(TimingBudget, StellarOrderOfMagnitude) {
  const auto t = hbt::timing_budget(1e4, 1e-8);
  EXPECT_NEAR(t.coherence_time, hbt::kConstants.hbar / (hbt::kConstants.k_B * 1e4), 1e-30);
  EXPECT_GT(t.pair_probability, 1e-9);
  EXPECT_LT(t.pair_probability, 1e-5);
}

TEST(TimingBudget, PairProbabilityForTenFemtosecondCoherence) {
  const double t = hbt::kConstants.hbar / (hbt::kConstants.k_B * 1e-14);
  const auto b = hbt::timing_budget(t, 1e-8);
  EXPECT_NEAR(b.coherence_time, 1e-14, 1e-26);
  EXPECT_NEAR(b.pair_probability, 1e-6, 1e-18);
}

TEST(TimingBudget, CapAndScaling) {
  const auto a = hbt::timing_budget(5000.0, 1.0);
  EXPECT_EQ(hbt::timing_budget(5000.0, a.coherence_time).pair_probability, 1.0);
  EXPECT_NEAR(hbt::timing_budget(10000.0, 1.0).coherence_time, a.coherence_time / 2, 1e-30);
  EXPECT_THROW(hbt::timing_budget(0.0, 1.0), hbt::DomainError);
}

TEST(DeadTime, Bandwidth) {
  EXPECT_DOUBLE_EQ(hbt::electronic_bandwidth_from_dead_time(2e-9), 5e8);
  EXPECT_THROW(hbt::electronic_bandwidth_from_dead_time(0.0), hbt::DomainError);
}

}  // namespace
