#pragma once

#include <complex>
#include <cstdint>

#include "hbt/coherence.hpp"
#include "hbt/specialfn.hpp"

// Brute-force cross-checks of the closed-form coherence results. None of
// these routines call into the Bessel-based closed forms.

namespace hbt {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0x5EED;
  unsigned workers = 1;
};

void validate(const McConfig& cfg);

struct McEstimate {
  double gamma2_hat;
  double std_error;  // delete-one-block jackknife
};

/// Number of jackknife blocks. Each block draws from its own generator
/// seeded by (seed, block index), so results do not depend on `workers`.
inline constexpr int kJackknifeBlocks = 100;

/// Samples thermal P-function amplitudes for two point sources with mean
/// occupations n1, n2 and estimates <I1 I2>/(<I1><I2>) for detectors whose
/// relative fringe phase is `phase`.
McEstimate mc_gamma2_two_sources(double n1, double n2, double phase, const McConfig& cfg = {});

struct QuadratureEstimate {
  double value;
  double error_estimate;  // difference to the next coarser level
};

/// Averages the two-point-source coherence over every pair of points on the
/// two discs by direct tensor-product quadrature. `spec.target_abs_tol` is
/// the tolerance on gamma2 itself.
QuadratureEstimate quadrature_gamma2_binary(const BinarySystem& system, double frequency,
                                            double baseline,
                                            const QuadratureSpec& spec = {16, 32, 1e-9});

struct DeterminantCheck {
  double lhs;                   // LU determinant of the 4x4 real Gaussian matrix
  double rhs;                   // closed form
  double generating_functional; // Z from the LU determinant
};

/// Builds the real 4x4 quadratic form of the two-mode thermal Gaussian
/// integral and compares its LU determinant with the closed-form expression.
/// Requires 1/n_l - A_ll > 0.
DeterminantCheck gaussian_determinant_identity(double a11, double a22, std::complex<double> a12,
                                               double n1, double n2);

}  // namespace hbt
