#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hbt/catalog.hpp"
#include "hbt/coherence.hpp"
#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/specialfn.hpp"
#include "oracles/hand_formulas.hpp"
#include "test_support.hpp"

namespace {

using hbt::BinarySystem;
using hbt::kConstants;
constexpr double kPi = std::numbers::pi;

BinarySystem luhman() { return hbt::Catalog::builtin().find("luhman16").to_system(); }
BinarySystem spica() { return hbt::Catalog::builtin().find("spica").to_system(); }

oracle::Binary as_oracle(const BinarySystem& s) {
  return {s.body_a().radius, s.body_b().radius, s.body_a().temperature, s.body_b().temperature,
          s.separation(), s.observer_distance()};
}

TEST(BinarySystem, SwapsSoThatALargest) {
  const auto sys = BinarySystem::create({1e8, 3000}, {2e8, 4000}, 1e10, 1e16);
  EXPECT_TRUE(sys.swapped());
  EXPECT_EQ(sys.body_a().radius, 2e8);
  EXPECT_EQ(sys.body_a().temperature, 4000);
  EXPECT_FALSE(luhman().swapped());
}

TEST(BinarySystem, RejectsInvalid) {
  EXPECT_THROW(BinarySystem::create({-1, 3000}, {1, 3000}, 10, 1e6), hbt::DomainError);
  EXPECT_THROW(BinarySystem::create({1, 0}, {1, 3000}, 10, 1e6), hbt::DomainError);
  EXPECT_THROW(BinarySystem::create({1, 3000}, {1, 3000}, 1.5, 1e6), hbt::DomainError);
  EXPECT_THROW(BinarySystem::create({1, 3000}, {1, 3000}, 10, 5), hbt::DomainError);
}

TEST(BinarySystem, FarFieldWarning) {
  EXPECT_TRUE(BinarySystem::create({1, 3000}, {1, 3000}, 10, 5e3).far_field_warning());
  EXPECT_FALSE(BinarySystem::create({1, 3000}, {1, 3000}, 10, 5e4).far_field_warning());
  EXPECT_FALSE(luhman().far_field_warning());
}

TEST(DerivedRatios, RangesOnRandomSystems) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing_support::random_system(rng);
    const auto r = hbt::derived_ratios(sys, testing_support::random_frequency(rng));
    EXPECT_GT(r.s, 0.0);
    EXPECT_LE(r.s, 1.0);
    EXPECT_GT(r.N, 0.0);
    EXPECT_TRUE(std::isfinite(r.N));
  }
}

TEST(TwoSources, Examples) {
  for (double n : {0.01, 1.0, 7.0}) EXPECT_DOUBLE_EQ(hbt::gamma2_two_sources(n, 0.0), 2.0);
  EXPECT_NEAR(hbt::gamma2_two_sources(1.0, kPi), 1.0, 1e-15);
  EXPECT_NEAR(hbt::gamma2_two_sources(1e12, 1.3), 2.0, 1e-11);
}

TEST(TwoSources, MatchesInterferenceForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> phase(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double n1 = testing_support::log_uniform(rng, 1e-4, 1e2);
    const double n2 = testing_support::log_uniform(rng, 1e-4, 1e2);
    const double phi = phase(rng);
    EXPECT_NEAR(hbt::gamma2_two_sources(n2 / n1, phi),
                static_cast<double>(oracle::two_source_interference(n1, n2, phi)), 1e-14);
  }
}

TEST(Single, Limits) {
  const double omega = hbt::angular_frequency(600e12), r = 7e8, big_d = 1e17;
  EXPECT_DOUBLE_EQ(hbt::gamma2_single(0.0, r, big_d, omega), 2.0);
  const double x_asy = hbt::baseline_asy(omega, big_d, r);
  EXPECT_NEAR(hbt::gamma2_single(x_asy, r, big_d, omega), 1.5, 1e-12);
  EXPECT_NEAR(hbt::gamma2_single(1e4 * x_asy, r, big_d, omega), 1.5, 1e-9);
  for (double x : {0.1, 1.0, 7.7, 50.0})
    EXPECT_NEAR(hbt::gamma2_single(x, r, big_d, omega),
                static_cast<double>(oracle::single_gamma2(r, big_d, 600e12L, x)), 1e-13);
}

TEST(CrossTerm, HalfAtOrigin) {
  EXPECT_DOUBLE_EQ(hbt::gamma2_cross_term(0.0, 1.0, 2.0, 10.0, 3.0), 0.5);
}

TEST(Binary, NormalizedAtOriginForRandomSystems) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing_support::random_system(rng);
    EXPECT_NEAR(hbt::gamma2_binary(0.0, sys, testing_support::random_frequency(rng)), 2.0, 1e-9);
  }
}

TEST(Binary, MatchesHandTranscription) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> frac(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing_support::random_system(rng);
    const double nu = testing_support::random_frequency(rng);
    const double x_asy = hbt::baseline_asy(hbt::angular_frequency(nu), sys.observer_distance(),
                                           sys.body_a().radius);
    const double x = frac(rng) * x_asy;
    EXPECT_NEAR(hbt::gamma2_binary(x, sys, nu),
                static_cast<double>(oracle::binary_gamma2(as_oracle(sys), nu, x)), 1e-11);
  }
}

TEST(Binary, WithinThermalBounds) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> frac(0.0, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const auto sys = testing_support::random_system(rng);
    const double nu = testing_support::random_frequency(rng);
    const double x_osc = hbt::baseline_osc(hbt::angular_frequency(nu), sys.observer_distance(),
                                           sys.separation());
    const double g = hbt::gamma2_binary(frac(rng) * x_osc, sys, nu);
    EXPECT_GE(g, 1.0);
    EXPECT_LE(g, 2.0 + 1e-15);
  }
}

TEST(Binary, EqualBodiesReachThreeHalvesAtFirstMinimum) {
  const auto sys = BinarySystem::create({1e7, 6000}, {1e7, 6000}, 1e11, 1e17);
  const double nu = 600e12;
  const double x_osc = hbt::baseline_osc(hbt::angular_frequency(nu), sys.observer_distance(),
                                         sys.separation());
  EXPECT_NEAR(hbt::gamma2_binary(x_osc, sys, nu), 1.5, 1e-5);
}

TEST(Binary, VanishingCompanionGivesSingleCurve) {
  const auto sys = BinarySystem::create({7e8, 6000}, {7e8 * 1e-5, 9000}, 1e11, 1e17);
  const hbt::BinaryCoherence g(sys, 600e12);
  ASSERT_LE(g.s(), 1e-8);
  const double x_asy = hbt::baseline_asy(g.omega(), sys.observer_distance(), 7e8);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = 3.0 * x_asy * i / 199.0;
    worst = std::max(worst, std::abs(g(x) - g.single(x)));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(Binary, PointSourceLimit) {
  const double nu = 300e12;
  for (double tb : {3000.0, 6000.0, 12000.0}) {
    const auto sys = BinarySystem::create({1e2, 6000}, {1e2, tb}, 1e11, 1e17);
    const hbt::BinaryCoherence g(sys, nu);
    const double x_osc = hbt::baseline_osc(g.omega(), sys.observer_distance(), sys.separation());
    for (double f : {0.0, 0.3, 1.0, 2.5, 7.1}) {
      const double x = f * x_osc;
      const double phase = g.omega() * x * sys.separation() / (kConstants.c * sys.observer_distance());
      EXPECT_NEAR(g(x), 1.0 + hbt::gamma2_two_sources(g.N(), phase) / 2.0, 1e-6) << tb << " " << f;
    }
  }
}

TEST(Binary, ConcentricLimitIsMonotone) {
  const auto sys = BinarySystem::create({7e8, 6000}, {3e8, 9000}, 0.0, 1e17);
  const hbt::BinaryCoherence g(sys, 600e12);
  const double x_asy = hbt::baseline_asy(g.omega(), sys.observer_distance(), 7e8);
  double prev = g(0.0);
  for (int i = 1; i <= 400; ++i) {
    const double x = x_asy * i / 400.0;
    const double cur = g(x);
    EXPECT_LE(cur, prev + 1e-15) << x;
    prev = cur;
  }
}

TEST(Asymptote, Examples) {
  for (double s : {1e-3, 0.2, 1.0, 7.0}) EXPECT_NEAR(hbt::gamma_infinity(s, 1.0), 1.5, 1e-15);
  EXPECT_NEAR(hbt::gamma_infinity(1.0, 1e-12), 1.75, 1e-11);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const double s = testing_support::log_uniform(rng, 1e-3, 1e3);
    const double n = testing_support::log_uniform(rng, 1e-6, 1e6);
    EXPECT_NEAR(hbt::gamma_infinity(s, n), hbt::gamma_infinity(1 / s, 1 / n), 1e-14);
    EXPECT_NEAR(hbt::gamma_min(s, n), hbt::gamma_min(1 / s, 1 / n), 1e-14);
    EXPECT_GE(hbt::gamma_infinity(s, n), 1.5);
    EXPECT_LE(hbt::gamma_infinity(s, n), 1.75);
  }
}

TEST(Asymptote, SampledTailApproachesPlateau) {
  const auto sys = luhman();
  const hbt::BinaryCoherence g(sys, 600e12);
  const double x_asy = hbt::baseline_asy(g.omega(), sys.observer_distance(), sys.body_a().radius);
  for (double x = 20 * x_asy; x < 40 * x_asy; x += 0.37 * x_asy)
    EXPECT_NEAR(g(x), g.gamma_inf(), 1e-3);
}

TEST(Minimum, Examples) {
  EXPECT_NEAR(hbt::gamma_min(1.0, 1.0), 1.5, 1e-15);
  EXPECT_NEAR(hbt::gamma_min(1e-12, 0.7), 2.0, 1e-11);
  EXPECT_NEAR(hbt::gamma_min(0.25, 1.0), 1.68, 1e-15);
}

TEST(Baselines, LuhmanAtTenTerahertz) {
  const auto sys = luhman();
  const double omega = hbt::angular_frequency(10e12);
  const double x_osc = hbt::baseline_osc(omega, sys.observer_distance(), sys.separation());
  const double hand = kPi * kConstants.c * 6.51 * kConstants.ly / (omega * 3 * kConstants.AU);
  EXPECT_NEAR(x_osc, hand, 1e-12 * hand);
  EXPECT_NEAR(x_osc, 2.06, 0.01);
  EXPECT_NEAR(49 * x_osc, 101, 1.0);
  const double x_asy = hbt::baseline_asy(omega, sys.observer_distance(), sys.body_a().radius);
  EXPECT_NEAR(x_asy, 1.5e4, 0.05e4);
  EXPECT_GT(x_asy, 1e3);
}

TEST(Baselines, Scaling) {
  const double omega = 1e15;
  EXPECT_DOUBLE_EQ(hbt::baseline_osc(omega, 1e17, 2e11), hbt::baseline_osc(omega, 1e17, 1e11) / 2);
  EXPECT_DOUBLE_EQ(hbt::baseline_osc(omega, 2e17, 1e11), hbt::baseline_osc(omega, 1e17, 1e11) * 2);
  EXPECT_DOUBLE_EQ(hbt::baseline_asy(omega, 1e17, 2e8), hbt::baseline_asy(omega, 1e17, 1e8) / 2);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto sys = testing_support::random_system(rng);
    EXPECT_GT(hbt::baseline_asy(omega, sys.observer_distance(), sys.body_a().radius),
              hbt::baseline_osc(omega, sys.observer_distance(), sys.separation()));
  }
}

TEST(Ladder, Examples) {
  const auto ladder = hbt::minima_ladder(1.0, 5.0);
  ASSERT_EQ(ladder.rungs.size(), 3u);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(ladder.rungs[m - 1].m, m);
    EXPECT_DOUBLE_EQ(ladder.rungs[m - 1].baseline, 2 * m - 1);
  }
  EXPECT_FALSE(ladder.empty_guard);
  const auto empty = hbt::minima_ladder(2.0, 1.0);
  EXPECT_TRUE(empty.rungs.empty());
  EXPECT_TRUE(empty.empty_guard);
  EXPECT_EQ(hbt::minima_count(1.0, 5.0), 3);
}

TEST(Ladder, LuhmanRungs) {
  const auto sys = luhman();
  const double omega = hbt::angular_frequency(10e12);
  const double x_osc = hbt::baseline_osc(omega, sys.observer_distance(), sys.separation());
  const double x_asy = hbt::baseline_asy(omega, sys.observer_distance(), sys.body_a().radius);
  const auto ladder = hbt::minima_ladder(x_osc, x_asy);
  ASSERT_GE(ladder.rungs.size(), 25u);
  EXPECT_NEAR(ladder.rungs[5].baseline, 22.7, 0.1);
  EXPECT_NEAR(ladder.rungs[24].baseline, 101, 1.0);
}

// Each rung is a true local minimum of the full curve. The bracket is +-20%
// of the 2 x_osc spacing between neighbouring minima.
TEST(Ladder, RungsAreCurveMinima) {
  const auto sys = luhman();
  const double nu = 10e12;
  const hbt::BinaryCoherence g(sys, nu);
  const double x_osc = hbt::baseline_osc(g.omega(), sys.observer_distance(), sys.separation());
  const double x_asy = hbt::baseline_asy(g.omega(), sys.observer_distance(), sys.body_a().radius);
  ASSERT_LE(x_osc, x_asy / 10);
  const auto ladder = hbt::minima_ladder(x_osc, x_asy);
  for (std::size_t i = 0; i < ladder.rungs.size(); i += 97) {
    const double x0 = ladder.rungs[i].baseline;
    const auto m = hbt::minimize_scalar([&](double x) { return g(x); }, x0 - 0.4 * x_osc,
                                        x0 + 0.4 * x_osc);
    EXPECT_NEAR(m.x, x0, 0.01 * x0) << "m=" << ladder.rungs[i].m;
  }
}

TEST(ApparentSeparation, Examples) {
  const double d = 1e11, big_d = 1e16;
  EXPECT_NEAR(hbt::apparent_separation(d, kPi / 2, big_d), d / std::sqrt(1 - 1e-10), 1e-6);
  EXPECT_EQ(hbt::apparent_separation(d, 0.0, big_d), 0.0);
  EXPECT_NEAR(hbt::apparent_separation(d, kPi / 6, big_d) / (d / 2), 1.0, 1e-10);
  EXPECT_THROW(hbt::apparent_separation(d, 7.0, big_d), hbt::DomainError);
}

TEST(SampleCurve, SinglePointAtOrigin) {
  const auto c = hbt::sample_curve(spica(), 600e12, {0.0});
  ASSERT_EQ(c.gamma2.size(), 1u);
  EXPECT_NEAR(c.gamma2[0], 2.0, 1e-12);
}

TEST(SampleCurve, RejectsBadGrids) {
  EXPECT_THROW(hbt::sample_curve(spica(), 600e12, {1.0, 0.5}), hbt::DomainError);
  EXPECT_THROW(hbt::sample_curve(spica(), 600e12, {-1.0, 0.5}), hbt::DomainError);
}

TEST(SampleCurve, AlignedOrbitHasNoOscillation) {
  const auto sys = spica();
  const double nu = 600e12;
  const double x_asy = hbt::baseline_asy(hbt::angular_frequency(nu), sys.observer_distance(),
                                         sys.body_a().radius);
  std::vector<double> xs;
  for (int i = 0; i <= 500; ++i) xs.push_back(x_asy * i / 500.0);
  const auto c = hbt::sample_curve(sys, nu, xs, 0.0);
  for (std::size_t i = 1; i < c.gamma2.size(); ++i) EXPECT_LE(c.gamma2[i], c.gamma2[i - 1] + 1e-15);
}

}  // namespace
