#pragma once

namespace hbt {

/// Two identical telescopes feeding photon counters behind a band filter.
struct InstrumentConfig {
  double telescope_radius;          // m
  double quantum_efficiency;        // (0, 1]
  double electronic_bandwidth;      // Hz, usually 1/T_dead
  double filter_center_wavelength;  // m
  double filter_bandwidth;          // m
  double attenuation_factor = 1.0;  // (0, 1]
};

void validate(const InstrumentConfig& instrument);

/// Electronic bandwidth 1/T_dead.
double electronic_bandwidth_from_dead_time(double dead_time);

/// Photons per second collected by one telescope from an energy flux given
/// per nanometre of bandwidth (W m^-2 nm^-1): pi R^2 eta dlambda F lambda/(h c).
double photon_rate(double flux_per_nm, const InstrumentConfig& instrument);

/// photon_rate scaled by the attenuation factor.
double attenuated_photon_rate(double flux_per_nm, const InstrumentConfig& instrument);

/// Inputs of the RMS signal-to-noise formula except the exposure time.
/// `photon_flux_per_hz` counts photons s^-1 m^-2 Hz^-1 and is a separate
/// quantity from the energy flux taken by photon_rate.
struct OperatingPoint {
  double area_geometric_mean;  // m^2
  double efficiency;
  double photon_flux_per_hz;
  double gamma_excess;         // gamma2(x) - 3/2
  double electronic_bandwidth; // Hz
};

/// A eta F (gamma2 - 3/2) sqrt(delta_f) sqrt(tau/2).
double snr_rms(const OperatingPoint& op, double exposure_time);

/// Exposure that reaches `target_snr`; exact inverse of snr_rms in tau.
/// Throws DomainError("infeasible operating point") when gamma_excess is zero.
double required_integration_time(double target_snr, const OperatingPoint& op);

struct SnrReport {
  double snr;
  double integration_time;
  double photon_rate;
  double attenuated_rate;
};

struct TimingBudget {
  double coherence_time;    // s
  double pair_probability;  // coherence_time / binning_time, capped at 1
};

/// Thermal coherence time hbar/(k_B T) against the coincidence bin width.
TimingBudget timing_budget(double temperature, double binning_time);

}  // namespace hbt
