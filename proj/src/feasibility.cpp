#include "hbt/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"

namespace hbt {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void validate(const OperatingPoint& op) {
  detail::require(positive(op.area_geometric_mean), "collecting area must be positive");
  detail::require(positive(op.efficiency), "efficiency must be positive");
  detail::require(positive(op.photon_flux_per_hz), "photon flux must be positive");
  detail::require(positive(op.electronic_bandwidth), "electronic bandwidth must be positive");
  detail::require(std::isfinite(op.gamma_excess) && op.gamma_excess >= 0.0,
                  "gamma excess must be non-negative (non-physical operating point)");
}

}  // namespace

void validate(const InstrumentConfig& in) {
  detail::require(positive(in.telescope_radius), "telescope radius must be positive");
  detail::require(positive(in.quantum_efficiency) && in.quantum_efficiency <= 1.0,
                  "quantum efficiency must lie in (0, 1]");
  detail::require(positive(in.electronic_bandwidth), "electronic bandwidth must be positive");
  detail::require(positive(in.filter_center_wavelength), "filter wavelength must be positive");
  detail::require(positive(in.filter_bandwidth), "filter bandwidth must be positive");
  detail::require(positive(in.attenuation_factor) && in.attenuation_factor <= 1.0,
                  "attenuation factor must lie in (0, 1]");
}

double electronic_bandwidth_from_dead_time(double dead_time) {
  detail::require(positive(dead_time), "dead time must be positive");
  return 1.0 / dead_time;
}

double photon_rate(double flux_per_nm, const InstrumentConfig& in) {
  validate(in);
  detail::require(positive(flux_per_nm), "flux must be positive");
  const double area = std::numbers::pi * in.telescope_radius * in.telescope_radius;
  const double bandwidth_nm = in.filter_bandwidth * 1e9;
  const double photon_energy = kConstants.h * kConstants.c / in.filter_center_wavelength;
  return area * in.quantum_efficiency * bandwidth_nm * flux_per_nm / photon_energy;
}

double attenuated_photon_rate(double flux_per_nm, const InstrumentConfig& in) {
  return photon_rate(flux_per_nm, in) * in.attenuation_factor;
}

double snr_rms(const OperatingPoint& op, double exposure_time) {
  validate(op);
  detail::require(positive(exposure_time), "exposure time must be positive");
  return op.area_geometric_mean * op.efficiency * op.photon_flux_per_hz * op.gamma_excess *
         std::sqrt(op.electronic_bandwidth) * std::sqrt(exposure_time / 2.0);
}

double required_integration_time(double target_snr, const OperatingPoint& op) {
  validate(op);
  detail::require(positive(target_snr), "target SNR must be positive");
  if (op.gamma_excess == 0.0) throw DomainError("infeasible operating point: no excess coherence");
  const double per_root_second = op.area_geometric_mean * op.efficiency * op.photon_flux_per_hz *
                                 op.gamma_excess * std::sqrt(op.electronic_bandwidth);
  const double ratio = target_snr / per_root_second;
  return 2.0 * ratio * ratio;
}

TimingBudget timing_budget(double temperature, double binning_time) {
  detail::require(positive(temperature), "temperature must be positive");
  detail::require(positive(binning_time), "binning time must be positive");
  const double coherence = kConstants.hbar / (kConstants.k_B * temperature);
  return {coherence, std::min(1.0, coherence / binning_time)};
}

}  // namespace hbt
