#include "hbt/radiometry.hpp"

#include <cmath>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"

namespace hbt {
namespace {

// Beyond this the exp(-x) correction is below double resolution relative to x.
constexpr double kLargeReducedEnergy = 40.0;

// log(1/(e^x - 1)) without overflow.
double log_occupation(double x) {
  if (x < kLargeReducedEnergy) return -std::log(std::expm1(x));
  return -x - std::log1p(-std::exp(-x));
}

// Inverse of log_occupation: x = log(1 + e^{-L}).
double reduced_energy_from_log_occupation(double log_n) {
  if (-log_n > kLargeReducedEnergy) return -log_n + std::log1p(std::exp(log_n));
  return std::log1p(std::exp(-log_n));
}

}  // namespace

double reduced_energy(double frequency, double temperature) {
  detail::require(std::isfinite(frequency) && frequency > 0.0, "frequency must be positive");
  detail::require(std::isfinite(temperature) && temperature > 0.0,
                  "temperature must be positive");
  return kConstants.h * frequency / (kConstants.k_B * temperature);
}

Occupation mean_photon_number(double frequency, double temperature) {
  const double x = reduced_energy(frequency, temperature);
  Occupation occ;
  occ.n_bar = 1.0 / std::expm1(x);
  occ.log_n_bar = log_occupation(x);
  return occ;
}

double temperature_from_occupation(double frequency, const Occupation& occupation) {
  detail::require(std::isfinite(frequency) && frequency > 0.0, "frequency must be positive");
  detail::require(std::isfinite(occupation.log_n_bar), "occupation must be positive");
  const double x = reduced_energy_from_log_occupation(occupation.log_n_bar);
  return kConstants.h * frequency / (kConstants.k_B * x);
}

double temperature_from_occupation(double frequency, double n_bar) {
  detail::require(std::isfinite(n_bar) && n_bar > 0.0, "occupation must be positive");
  detail::require(std::isfinite(frequency) && frequency > 0.0, "frequency must be positive");
  return kConstants.h * frequency / (kConstants.k_B * std::log1p(1.0 / n_bar));
}

double occupation_ratio(const Occupation& a, const Occupation& b) {
  return std::exp(b.log_n_bar - a.log_n_bar);
}

double flux_from_magnitude(double magnitude, double reference_flux) {
  detail::require(std::isfinite(reference_flux) && reference_flux > 0.0,
                  "reference flux must be positive");
  detail::require(std::isfinite(magnitude), "magnitude must be finite");
  return reference_flux * std::pow(10.0, -magnitude / 2.5);
}

}  // namespace hbt
