#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hbt/catalog.hpp"
#include "hbt/coherence.hpp"
#include "hbt/errors.hpp"
#include "hbt/oracle.hpp"
#include "test_support.hpp"

namespace {

using hbt::BinarySystem;
constexpr double kPi = std::numbers::pi;

void expect_within_sigmas(const hbt::McEstimate& est, double truth, double sigmas = 4.0) {
  EXPECT_LE(std::abs(est.gamma2_hat - truth), sigmas * est.std_error)
      << "estimate " << est.gamma2_hat << " +- " << est.std_error << " vs " << truth;
}

TEST(McConfig, Validation) {
  EXPECT_NO_THROW(hbt::validate(hbt::McConfig{}));
  EXPECT_THROW(hbt::validate(hbt::McConfig{100, 1, 1}), hbt::DomainError);
  EXPECT_THROW(hbt::validate(hbt::McConfig{100000, 1, 0}), hbt::DomainError);
}

TEST(MonteCarlo, ColocatedEqualSourcesGiveTwo) {
  expect_within_sigmas(hbt::mc_gamma2_two_sources(0.5, 0.5, 0.0, {200000, 1, 1}), 2.0);
}

TEST(MonteCarlo, OppositePhaseEqualSourcesGiveOne) {
  expect_within_sigmas(hbt::mc_gamma2_two_sources(0.5, 0.5, kPi, {200000, 2, 1}), 1.0);
}

TEST(MonteCarlo, UnequalSourcesMatchClosedForm) {
  const double closed = hbt::gamma2_two_sources(0.2, kPi);
  EXPECT_NEAR(closed, 2.0 * (1.0 - 2.0 * 0.2 / 1.44), 1e-15);
  expect_within_sigmas(hbt::mc_gamma2_two_sources(1.0, 0.2, kPi, {400000, 3, 1}), closed);
}

TEST(MonteCarlo, DeterministicAndWorkerIndependent) {
  const auto a = hbt::mc_gamma2_two_sources(0.3, 1.7, 0.9, {50000, 42, 1});
  const auto b = hbt::mc_gamma2_two_sources(0.3, 1.7, 0.9, {50000, 42, 1});
  const auto c = hbt::mc_gamma2_two_sources(0.3, 1.7, 0.9, {50000, 42, 4});
  EXPECT_EQ(a.gamma2_hat, b.gamma2_hat);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_EQ(a.gamma2_hat, c.gamma2_hat);
  const auto d = hbt::mc_gamma2_two_sources(0.3, 1.7, 0.9, {50000, 43, 1});
  EXPECT_NE(a.gamma2_hat, d.gamma2_hat);
  EXPECT_GT(a.std_error, 0.0);
}

TEST(MonteCarlo, ErrorShrinksAsRootSamples) {
  const auto small = hbt::mc_gamma2_two_sources(1.0, 0.6, 2.0, {100000, 5, 1});
  const auto large = hbt::mc_gamma2_two_sources(1.0, 0.6, 2.0, {400000, 5, 1});
  EXPECT_NEAR(small.std_error / large.std_error, 2.0, 0.4);
}

TEST(MonteCarlo, BinomialAgreementOnRandomConfigurations) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
  int within = 0;
  for (int i = 0; i < 50; ++i) {
    const double n1 = testing_support::log_uniform(rng, 1e-3, 10.0);
    const double n2 = testing_support::log_uniform(rng, 1e-3, 10.0);
    const double phi = phase(rng);
    const auto est = hbt::mc_gamma2_two_sources(n1, n2, phi, {100000, rng(), 1});
    if (std::abs(est.gamma2_hat - hbt::gamma2_two_sources(n2 / n1, phi)) <= 4 * est.std_error)
      ++within;
  }
  EXPECT_GE(within, 47);
}

TEST(Quadrature, OriginIsTwo) {
  const auto sys = hbt::Catalog::builtin().find("spica").to_system();
  EXPECT_NEAR(hbt::quadrature_gamma2_binary(sys, 600e12, 0.0).value, 2.0, 1e-9);
}

TEST(Quadrature, RandomSystemsAtFirstMinimum) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 5; ++i) {
    const auto sys = testing_support::random_system(rng);
    const double nu = testing_support::random_frequency(rng);
    const double x_osc = hbt::baseline_osc(hbt::angular_frequency(nu), sys.observer_distance(),
                                           sys.separation());
    EXPECT_NEAR(hbt::quadrature_gamma2_binary(sys, nu, x_osc).value,
                hbt::gamma2_binary(x_osc, sys, nu), 1e-6);
  }
}

TEST(Quadrature, ConcentricBodies) {
  const auto sys = BinarySystem::create({7e8, 9000}, {4e8, 5000}, 0.0, 1e17);
  const double nu = 600e12;
  const double x_asy = hbt::baseline_asy(hbt::angular_frequency(nu), 1e17, 7e8);
  for (double f : {0.0, 0.3, 0.9, 1.6})
    EXPECT_NEAR(hbt::quadrature_gamma2_binary(sys, nu, f * x_asy).value,
                hbt::gamma2_binary(f * x_asy, sys, nu), 1e-6);
}

TEST(Determinant, ZeroCouplingNormalisation) {
  const auto c = hbt::gaussian_determinant_identity(0.0, 0.0, {0.0, 0.0}, 0.7, 2.5);
  const double expected = std::pow(4.0 / (0.7 * 2.5), 2);
  EXPECT_NEAR(c.lhs, expected, 1e-12 * expected);
  EXPECT_NEAR(c.rhs, expected, 1e-12 * expected);
  EXPECT_NEAR(c.generating_functional, 1.0, 1e-12);
}

TEST(Determinant, BlockDiagonalFactorises) {
  const double n1 = 0.4, n2 = 3.0, a11 = 0.9, a22 = -0.2;
  const auto c = hbt::gaussian_determinant_identity(a11, a22, {0.0, 0.0}, n1, n2);
  const double p = 2 * (1 / n1 - a11), q = 2 * (1 / n2 - a22);
  EXPECT_NEAR(c.lhs, p * p * q * q, 1e-12 * p * p * q * q);
}

TEST(Determinant, RandomCoefficientSets) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double n1 = testing_support::log_uniform(rng, 1e-2, 1e2);
    const double n2 = testing_support::log_uniform(rng, 1e-2, 1e2);
    const double a11 = (2 * unit(rng) - 1) * 0.95 / n1;
    const double a22 = (2 * unit(rng) - 1) * 0.95 / n2;
    const double mag = 0.95 * unit(rng) * std::sqrt((1 / n1 - a11) * (1 / n2 - a22));
    const auto c = hbt::gaussian_determinant_identity(a11, a22, std::polar(mag, 6.28 * unit(rng)), n1, n2);
    EXPECT_LE(std::abs(c.lhs - c.rhs), 1e-10 * std::abs(c.rhs));
  }
}

TEST(Determinant, RejectsDivergentIntegral) {
  EXPECT_THROW(hbt::gaussian_determinant_identity(2.0, 0.0, {0.0, 0.0}, 1.0, 1.0),
               hbt::DomainError);
}

}  // namespace
