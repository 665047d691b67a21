#pragma once

// Black-body occupation numbers and photometric flux conversion.

namespace hbt {

/// Mean photon number of a thermal mode.
///
/// `n_bar` underflows to zero once h*nu/(k_B*T) exceeds ~745; `log_n_bar`
/// stays finite there, so ratios and inversions should go through it.
struct Occupation {
  double n_bar = 0.0;
  double log_n_bar = 0.0;
};

/// Zero point used when converting V-band magnitudes to spectral flux
/// (W m^-2 nm^-1). Always echoed alongside derived fluxes.
inline constexpr double kDefaultVBandReferenceFlux = 3.63e-11;

/// Reduced photon energy h*nu/(k_B*T).
double reduced_energy(double frequency, double temperature);

/// Bose-Einstein occupation 1/(exp(h nu / k_B T) - 1). Throws DomainError
/// for non-positive frequency or temperature.
Occupation mean_photon_number(double frequency, double temperature);

/// Inverse of mean_photon_number in T.
double temperature_from_occupation(double frequency, double n_bar);
double temperature_from_occupation(double frequency, const Occupation& occupation);

/// n_b / n_a evaluated in log space.
double occupation_ratio(const Occupation& a, const Occupation& b);

/// F = F' * 10^(-m/2.5).
double flux_from_magnitude(double magnitude,
                           double reference_flux = kDefaultVBandReferenceFlux);

}  // namespace hbt
