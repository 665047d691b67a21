#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "hbt/analysis.hpp"
#include "hbt/catalog.hpp"
#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/feasibility.hpp"
#include "hbt/radiometry.hpp"
#include "verify.hpp"

namespace hbt::cli {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kCurveSchema = "hbt-curve/1";
constexpr const char* kReportSchema = "hbt-report/1";

// Raw option strings exactly as given; empty means "not supplied".
struct Options {
  std::string system;
  std::string nu;
  std::string alpha;
  std::string grid;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0x5EED;

  std::string radius_a, radius_b, temp_a, temp_b, separation, distance, magnitude;

  // estimate
  std::string gamma_min, gamma_inf, x_osc, x_asy;
  // feasibility
  std::string telescope_radius = "0.6 m";
  std::string efficiency = "0.3";
  std::string filter_center = "550 nm";
  std::string filter_width = "88 nm";
  std::string dead_time;
  std::string attenuation;
  std::string attenuated_rate;
  std::string reference_flux;
  std::string photon_flux_per_hz;
  std::string target_snr = "50";
  std::string exposure = "1 s";
  std::string baseline;
  std::string binning_time = "1e-8 s";
  // verify
  std::string suite = "all";
  std::uint64_t samples = 1'000'000;
  unsigned workers = 0;
  // catalog show
  std::string name;
};

struct Output {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::string body;
};

void record(Output& o, const char* flag, const std::string& value) {
  if (!value.empty()) o.inputs[flag] = value;
}

double number(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::logic_error&) {
    throw DomainError(std::string("cannot parse ") + what + " '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v))
    throw DomainError(std::string("cannot parse ") + what + " '" + text + "'");
  return v;
}

bool has_unit(const std::string& text) {
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E') return true;
  return false;
}

// Accepts "<number>" in SI or "<number> <unit>".
double quantity_si(const std::string& text, Dimension dim, const char* what) {
  if (!has_unit(text)) return number(text, what);
  return parse_quantity(text, dim).si();
}

double positive_si(const std::string& text, Dimension dim, const char* what) {
  const double v = quantity_si(text, dim, what);
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
  return v;
}

double frequency_of(const Options& o) {
  if (o.nu.empty()) throw DomainError("--nu is required");
  return positive_si(o.nu, Dimension::frequency, "--nu");
}

std::optional<double> alpha_of(const Options& o) {
  if (o.alpha.empty()) return std::nullopt;
  return number(o.alpha, "--alpha");
}

struct ResolvedSystem {
  BinarySystem system;
  std::optional<double> magnitude;
  std::vector<std::string> notes;
};

// Catalog entry (if named) with any inline fields layered on top.
ResolvedSystem resolve_system(const Options& o, Output& out, bool geometry_defaults = false) {
  record(out, "--system", o.system);
  record(out, "--radius-a", o.radius_a);
  record(out, "--radius-b", o.radius_b);
  record(out, "--temp-a", o.temp_a);
  record(out, "--temp-b", o.temp_b);
  record(out, "--separation", o.separation);
  record(out, "--distance", o.distance);
  record(out, "--magnitude", o.magnitude);

  std::optional<CatalogEntry> entry;
  if (!o.system.empty()) entry = Catalog::load_default().find(o.system);

  ResolvedSystem r{BinarySystem::create({1, 1}, {1, 1}, 0.0, 1.0), std::nullopt, {}};
  auto field = [&](const std::string& flag_value, const Quantity* from_catalog, Dimension dim,
                   const char* what, const char* fallback) -> double {
    if (!flag_value.empty()) return positive_si(flag_value, dim, what);
    if (from_catalog != nullptr) return from_catalog->si();
    if (geometry_defaults && fallback != nullptr) {
      r.notes.push_back(std::string(what) + " not supplied; assumed " + fallback);
      return parse_quantity(fallback, dim).si();
    }
    throw DomainError(std::string("system incomplete: give --system or ") + what);
  };
  const double ra = field(o.radius_a, entry ? &entry->radius_a : nullptr, Dimension::length,
                          "--radius-a", "1 R_sun");
  const double rb = field(o.radius_b, entry ? &entry->radius_b : nullptr, Dimension::length,
                          "--radius-b", "1 R_sun");
  const double ta = field(o.temp_a, entry ? &entry->temperature_a : nullptr,
                          Dimension::temperature, "--temp-a", nullptr);
  const double tb = field(o.temp_b, entry ? &entry->temperature_b : nullptr,
                          Dimension::temperature, "--temp-b", nullptr);
  const double d = field(o.separation, entry ? &entry->separation : nullptr, Dimension::length,
                         "--separation", "1 AU");
  const double big_d = field(o.distance, entry ? &entry->distance : nullptr, Dimension::length,
                             "--distance", "10 ly");
  std::optional<double> period;
  if (entry) period = entry->orbital_period.si();
  r.system = BinarySystem::create({ra, ta}, {rb, tb}, d, big_d, period);
  if (!o.magnitude.empty())
    r.magnitude = number(o.magnitude, "--magnitude");
  else if (entry)
    r.magnitude = entry->apparent_magnitude_v;
  if (r.system.swapped()) r.notes.push_back("bodies reordered so that A is the larger one");
  if (r.system.far_field_warning()) r.notes.push_back("D/d below 1e3: far-field forms are approximate");
  return r;
}

ojson tagged(double value, const char* unit) {
  ojson j;
  j["value"] = value;
  j["unit"] = unit;
  return j;
}

ojson tagged(const std::optional<double>& value, const char* unit) {
  ojson j;
  j["value"] = value ? ojson(*value) : ojson(nullptr);
  j["unit"] = unit;
  return j;
}

std::string header_lines(const Output& o, const char* schema) {
  std::string h = "# command: " + o.command + "\n# schema: " + schema +
                  "\n# constants_version: " + kConstantsVersion + "\n";
  for (const auto& [k, v] : o.inputs) h += "# input " + k + ": " + v + "\n";
  if (o.seed) h += "# seed: " + std::to_string(*o.seed) + "\n";
  return h;
}

ojson manifest_head(const Output& o, const char* schema) {
  ojson j;
  j["schema"] = schema;
  j["command"] = o.command;
  j["constants_version"] = kConstantsVersion;
  j["inputs"] = o.inputs;
  if (o.seed) j["seed"] = *o.seed;
  return j;
}

void flatten(const ojson& node, const std::string& prefix, std::string& csv) {
  auto scalar = [](const ojson& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
  };
  if (node.is_object() && node.contains("unit") && node.contains("value") && node.size() == 2) {
    const ojson& v = node.at("value");
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        csv += prefix + "[" + std::to_string(i) + "]," + scalar(v[i]) + "," +
               node.at("unit").get<std::string>() + "\n";
    } else {
      csv += prefix + "," + scalar(v) + "," + node.at("unit").get<std::string>() + "\n";
    }
  } else if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, csv);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten(node[i], prefix + "[" + std::to_string(i) + "]", csv);
  } else {
    std::string text = scalar(node);
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
      text = quoted + "\"";
    }
    csv += prefix + "," + text + ",\n";
  }
}

// Renders a report either as JSON or as flattened quantity,value,unit rows.
void render_report(Output& o, const std::string& format, const ojson& results) {
  record(o, "--format", format);
  if (format == "json") {
    ojson j = manifest_head(o, kReportSchema);
    j["results"] = results;
    o.body = j.dump(2) + "\n";
  } else {
    std::string csv = header_lines(o, kReportSchema) + "quantity,value,unit\n";
    flatten(results, "", csv);
    o.body = csv;
  }
}

ojson features_json(const FeatureSet& f) {
  ojson j;
  j["gamma_min"] = tagged(f.gamma_min, "1");
  j["gamma_inf"] = tagged(f.gamma_inf, "1");
  j["x_osc"] = tagged(f.x_osc, "m");
  j["x_asy"] = tagged(f.x_asy, "m");
  j["f_osc"] = tagged(f.f_osc, "1");
  j["f_asy"] = tagged(f.f_asy, "1");
  j["usable_minima"] = tagged(static_cast<double>(f.usable_minima), "count");
  return j;
}

std::vector<double> default_grid(const BinarySystem& sys, double frequency, GridSpec& spec) {
  const double x_asy = baseline_asy(angular_frequency(frequency), sys.observer_distance(),
                                    sys.body_a().radius);
  spec = {0.0, 2.0 * x_asy, 401, false};
  return expand_grid(spec);
}

// ---------------------------------------------------------------- commands

void cmd_curve(const Options& o, Output& out) {
  out.command = "curve";
  const ResolvedSystem r = resolve_system(o, out);
  const double nu = frequency_of(o);
  const auto alpha = alpha_of(o);
  record(out, "--nu", o.nu);
  record(out, "--alpha", o.alpha);

  GridSpec spec{};
  std::vector<double> xs;
  if (o.grid.empty()) {
    xs = default_grid(r.system, nu, spec);
  } else {
    spec = parse_grid(o.grid);
    xs = expand_grid(spec);
  }
  out.inputs["--grid"] = format_grid(spec);
  record(out, "--format", o.format);

  const BinaryCoherence gamma(r.system, nu, alpha);
  if (o.format == "json") {
    ojson j = manifest_head(out, kCurveSchema);
    j["columns"] = {"baseline_m", "gamma2", "gamma2_single"};
    j["units"] = {"m", "1", "1"};
    ojson rows = ojson::array();
    for (double x : xs) rows.push_back({x, gamma(x), gamma.single(x)});
    j["rows"] = rows;
    out.body = j.dump(2) + "\n";
  } else {
    std::string csv = header_lines(out, kCurveSchema) + "baseline_m,gamma2,gamma2_single\n";
    for (double x : xs)
      csv += format_double(x) + "," + format_double(gamma(x)) + "," +
             format_double(gamma.single(x)) + "\n";
    out.body = csv;
  }
}

void cmd_features(const Options& o, Output& out) {
  out.command = "features";
  const ResolvedSystem r = resolve_system(o, out);
  const double nu = frequency_of(o);
  const auto alpha = alpha_of(o);
  record(out, "--nu", o.nu);
  record(out, "--alpha", o.alpha);

  ojson res;
  res["closed_form"] = features_json(forward_features(r.system, nu, alpha));
  if (!o.grid.empty()) {
    const GridSpec spec = parse_grid(o.grid);
    out.inputs["--grid"] = format_grid(spec);
    const CoherenceCurve curve = sample_curve(r.system, nu, expand_grid(spec), alpha);
    const FeatureSet f =
        extract_features(curve, {angular_frequency(nu), r.system.observer_distance()});
    res["extracted"] = features_json(f);
  }
  res["notes"] = r.notes;
  render_report(out, o.format, res);
}

void cmd_decide(const Options& o, Output& out) {
  out.command = "decide";
  const ResolvedSystem r = resolve_system(o, out, /*geometry_defaults=*/true);
  const double nu = frequency_of(o);
  record(out, "--nu", o.nu);
  const DecisionOutcome d = classify_strategy(r.system, nu);

  ojson res;
  res["dominant_feature"] = to_string(d.dominant_feature);
  res["t_minus"] = tagged(d.t_minus, "K");
  res["t_plus"] = tagged(d.t_plus, "K");
  res["f_osc"] = tagged(d.f_osc, "1");
  res["f_asy"] = tagged(d.f_asy, "1");
  res["occupation_ratio"] = tagged(d.N, "1");
  res["size_bound_ok"] = d.size_bound_ok;
  res["notes"] = r.notes;
  render_report(out, o.format, res);
}

void cmd_estimate(const Options& o, Output& out) {
  out.command = "estimate";
  const double nu = frequency_of(o);
  const double omega = angular_frequency(nu);
  const auto alpha = alpha_of(o);
  record(out, "--nu", o.nu);
  record(out, "--alpha", o.alpha);

  EstimateOptions opts;
  opts.phase_angle = alpha;
  FeatureSet features;
  double distance = 0.0;
  std::optional<ResolvedSystem> truth;

  const bool explicit_features =
      !o.gamma_min.empty() || !o.gamma_inf.empty() || !o.x_osc.empty() || !o.x_asy.empty();
  if (explicit_features) {
    if (o.gamma_min.empty() || o.gamma_inf.empty() || o.x_osc.empty() || o.x_asy.empty() ||
        o.distance.empty())
      throw DomainError(
          "explicit features need --gamma-min, --gamma-inf, --x-osc, --x-asy and --distance");
    record(out, "--gamma-min", o.gamma_min);
    record(out, "--gamma-inf", o.gamma_inf);
    record(out, "--x-osc", o.x_osc);
    record(out, "--x-asy", o.x_asy);
    record(out, "--distance", o.distance);
    record(out, "--temp-a", o.temp_a);
    features.gamma_min = number(o.gamma_min, "--gamma-min");
    features.gamma_inf = number(o.gamma_inf, "--gamma-inf");
    features.x_osc = positive_si(o.x_osc, Dimension::length, "--x-osc");
    features.x_asy = positive_si(o.x_asy, Dimension::length, "--x-asy");
    distance = positive_si(o.distance, Dimension::length, "--distance");
    if (!o.temp_a.empty()) opts.temperature_a = positive_si(o.temp_a, Dimension::temperature, "--temp-a");
  } else {
    truth = resolve_system(o, out);
    features = forward_features(truth->system, nu, alpha);
    distance = truth->system.observer_distance();
    opts.temperature_a = truth->system.body_a().temperature;
  }

  const EstimateResult e = estimate_parameters(features, omega, distance, opts);
  ojson res;
  res["radius_a"] = tagged(e.radius_a, "m");
  res["apparent_separation"] = tagged(e.apparent_separation, "m");
  res["separation"] = tagged(e.separation, "m");
  res["s_branches"] = tagged(std::nullopt, "1");
  res["s_branches"]["value"] = {e.s_branches.first, e.s_branches.second};
  res["occupation_ratio_branches"] = tagged(std::nullopt, "1");
  res["occupation_ratio_branches"]["value"] = {e.N_branches.first, e.N_branches.second};
  res["temperature_b_branches"] = tagged(std::nullopt, "K");
  if (e.temperature_b_branches)
    res["temperature_b_branches"]["value"] = {e.temperature_b_branches->first,
                                              e.temperature_b_branches->second};
  res["selected_s"] = tagged(e.selected_s, "1");
  res["equilibrium"] = e.equilibrium;
  res["selected_branch_rule"] = e.selected_branch_rule;
  res["notes"] = e.notes;

  if (truth) {
    const BinarySystem& sys = truth->system;
    const DerivedRatios dr = derived_ratios(sys, nu);
    const double ra_err = std::abs(e.radius_a - sys.body_a().radius) / sys.body_a().radius;
    // Without a phase the forward model used d* = d, so both cases compare to d.
    const double d_ref = sys.separation();
    const double d_hat = e.separation ? *e.separation : e.apparent_separation;
    const double d_err = std::abs(d_hat - d_ref) / d_ref;
    auto branch_err = [](std::pair<double, double> b, double t) {
      return std::min(std::abs(b.first - t) / t, std::abs(b.second - t) / t);
    };
    const double s_err = branch_err(e.s_branches, dr.s);
    const double n_err = branch_err(e.N_branches, dr.N);
    ojson rt;
    rt["radius_a_relative_error"] = tagged(ra_err, "1");
    rt["separation_relative_error"] = tagged(d_err, "1");
    rt["s_branch_relative_error"] = tagged(s_err, "1");
    rt["occupation_branch_relative_error"] = tagged(n_err, "1");
    rt["success"] = ra_err <= 5e-3 && d_err <= 5e-3 && s_err <= 2e-2 && n_err <= 2e-2;
    res["round_trip"] = rt;
  }
  render_report(out, o.format, res);
}

void cmd_feasibility(const Options& o, Output& out) {
  out.command = "feasibility";
  const ResolvedSystem r = resolve_system(o, out);
  const auto alpha = alpha_of(o);
  record(out, "--alpha", o.alpha);
  for (const auto& [flag, value] :
       {std::pair{"--telescope-radius", &o.telescope_radius}, {"--efficiency", &o.efficiency},
        {"--filter-center", &o.filter_center}, {"--filter-width", &o.filter_width},
        {"--dead-time", &o.dead_time}, {"--attenuation", &o.attenuation},
        {"--attenuated-rate", &o.attenuated_rate}, {"--reference-flux", &o.reference_flux},
        {"--photon-flux-per-hz", &o.photon_flux_per_hz}, {"--target-snr", &o.target_snr},
        {"--exposure", &o.exposure}, {"--baseline", &o.baseline},
        {"--binning-time", &o.binning_time}})
    record(out, flag, *value);

  if (o.dead_time.empty()) throw DomainError("--dead-time is required (electronic bandwidth is 1/T_dead)");
  if (!r.magnitude) throw DomainError("apparent magnitude unknown: give --magnitude");
  if (!o.attenuation.empty() && !o.attenuated_rate.empty())
    throw DomainError("give at most one of --attenuation and --attenuated-rate");

  InstrumentConfig inst{};
  inst.telescope_radius = positive_si(o.telescope_radius, Dimension::length, "--telescope-radius");
  inst.quantum_efficiency = number(o.efficiency, "--efficiency");
  inst.filter_center_wavelength = positive_si(o.filter_center, Dimension::length, "--filter-center");
  inst.filter_bandwidth = positive_si(o.filter_width, Dimension::length, "--filter-width");
  inst.electronic_bandwidth =
      electronic_bandwidth_from_dead_time(positive_si(o.dead_time, Dimension::time, "--dead-time"));
  const double ref_flux =
      o.reference_flux.empty() ? kDefaultVBandReferenceFlux : number(o.reference_flux, "--reference-flux");
  const double flux = flux_from_magnitude(*r.magnitude, ref_flux);

  const double raw_rate = photon_rate(flux, inst);
  if (!o.attenuation.empty()) inst.attenuation_factor = number(o.attenuation, "--attenuation");
  if (!o.attenuated_rate.empty())
    inst.attenuation_factor =
        std::min(1.0, positive_si(o.attenuated_rate, Dimension::frequency, "--attenuated-rate") / raw_rate);
  validate(inst);
  const double att_rate = attenuated_photon_rate(flux, inst);

  const double nu = kConstants.c / inst.filter_center_wavelength;
  const BinaryCoherence gamma(r.system, nu, alpha);
  const double x = o.baseline.empty()
                       ? baseline_osc(gamma.omega(), r.system.observer_distance(),
                                      gamma.effective_separation())
                       : quantity_si(o.baseline, Dimension::length, "--baseline");

  std::string flux_source;
  double photons_per_hz = 0.0;
  if (!o.photon_flux_per_hz.empty()) {
    photons_per_hz = number(o.photon_flux_per_hz, "--photon-flux-per-hz");
    flux_source = "supplied";
  } else {
    // Photon count over the filter band divided by the band's width in Hz.
    const double photons_per_m2 =
        flux * inst.filter_bandwidth * 1e9 / (kConstants.h * nu) * inst.attenuation_factor;
    const double band_hz = kConstants.c * inst.filter_bandwidth /
                           (inst.filter_center_wavelength * inst.filter_center_wavelength);
    photons_per_hz = photons_per_m2 / band_hz;
    flux_source = "derived from magnitude over the filter band, attenuation applied";
  }

  const double area = std::numbers::pi * inst.telescope_radius * inst.telescope_radius;
  const OperatingPoint op{area, inst.quantum_efficiency, photons_per_hz, gamma(x) - 1.5,
                          inst.electronic_bandwidth};
  const double exposure = positive_si(o.exposure, Dimension::time, "--exposure");
  const double target = number(o.target_snr, "--target-snr");
  const double binning = positive_si(o.binning_time, Dimension::time, "--binning-time");
  const TimingBudget tb = timing_budget(r.system.body_a().temperature, binning);

  ojson res;
  res["reference_flux"] = tagged(ref_flux, "W m^-2 nm^-1");
  res["spectral_energy_flux"] = tagged(flux, "W m^-2 nm^-1");
  res["photon_rate"] = tagged(raw_rate, "1/s");
  res["attenuation_factor"] = tagged(inst.attenuation_factor, "1");
  res["attenuated_rate"] = tagged(att_rate, "1/s");
  res["observation_frequency"] = tagged(nu, "Hz");
  res["baseline"] = tagged(x, "m");
  res["gamma2"] = tagged(gamma(x), "1");
  res["gamma_excess"] = tagged(op.gamma_excess, "1");
  res["photon_flux_per_hz"] = tagged(photons_per_hz, "1/(s m^2 Hz)");
  res["photon_flux_per_hz_source"] = flux_source;
  res["electronic_bandwidth"] = tagged(inst.electronic_bandwidth, "Hz");
  res["exposure"] = tagged(exposure, "s");
  res["snr_at_exposure"] = tagged(snr_rms(op, exposure), "1");
  res["target_snr"] = tagged(target, "1");
  if (op.gamma_excess > 0.0)
    res["required_integration_time"] = tagged(required_integration_time(target, op), "s");
  else
    res["required_integration_time"] = tagged(std::nullopt, "s");
  res["coherence_time"] = tagged(tb.coherence_time, "s");
  res["pair_probability"] = tagged(tb.pair_probability, "1");
  auto notes = r.notes;
  notes.push_back(
      "published absolute rates and microsecond exposure times depend on an unstated reference "
      "flux and dead time; they are not reproduced here");
  res["notes"] = notes;
  render_report(out, o.format, res);
}

int cmd_verify(const Options& o, Output& out) {
  out.command = "verify";
  out.inputs["--suite"] = o.suite;
  out.inputs["--samples"] = std::to_string(o.samples);
  out.seed = o.seed;
  const unsigned workers =
      o.workers > 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());

  std::vector<SuiteResult> results;
  const bool all = o.suite == "all";
  if (all || o.suite == "determinant") results.push_back(verify_determinant(o.seed));
  if (all || o.suite == "quadrature") results.push_back(verify_quadrature());
  if (all || o.suite == "mc") results.push_back(verify_mc(o.seed, o.samples, workers));

  bool ok = true;
  ojson suites = ojson::array();
  for (const auto& s : results) {
    ok = ok && s.passed;
    ojson j;
    j["suite"] = s.suite;
    j["status"] = s.passed ? "pass" : "fail";
    j["details"] = s.details;
    suites.push_back(j);
  }
  ojson j = manifest_head(out, "hbt-verify/1");
  j["status"] = ok ? "pass" : "fail";
  j["suites"] = suites;
  out.body = j.dump(2) + "\n";
  return ok ? kOk : kCheckFailed;
}

ojson entry_json(const CatalogEntry& e) {
  ojson j;
  j["name"] = e.name;
  auto q = [](const Quantity& quantity) {
    ojson v;
    v["display"] = format_quantity(quantity);
    v["si"] = quantity.si();
    return v;
  };
  j["distance"] = q(e.distance);
  j["radius_a"] = q(e.radius_a);
  j["radius_b"] = q(e.radius_b);
  j["temperature_a"] = q(e.temperature_a);
  j["temperature_b"] = q(e.temperature_b);
  j["separation"] = q(e.separation);
  j["orbital_period"] = q(e.orbital_period);
  j["apparent_magnitude_v"] = e.apparent_magnitude_v;
  return j;
}

void cmd_catalog_list(Output& out) {
  out.command = "catalog list";
  std::string body;
  for (const auto& n : Catalog::load_default().names()) body += n + "\n";
  out.body = body;
}

void cmd_catalog_show(const Options& o, Output& out) {
  out.command = "catalog show";
  out.inputs["name"] = o.name;
  out.body = entry_json(Catalog::load_default().find(o.name)).dump(2) + "\n";
}

void emit(const Options& o, Output& out, std::ostream& stdout_stream, std::ostream& err) {
  RunManifest m;
  m.command = out.command;
  m.inputs = out.inputs;
  m.constants_version = kConstantsVersion;
  m.seed = out.seed;
  m.output_digest = "sha256:" + sha256_hex(out.body);
  if (o.out.empty()) {
    stdout_stream << out.body;
    err << m.to_json();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + o.out + "'");
  f << out.body;
  std::ofstream mf(manifest_path(o.out), std::ios::binary);
  if (!mf) throw DomainError("cannot write '" + manifest_path(o.out) + "'");
  mf << m.to_json();
}

void add_system_flags(CLI::App* app, Options& o) {
  app->add_option("--system", o.system, "Catalog system name");
  app->add_option("--radius-a", o.radius_a, "Radius of body A, e.g. '1.04 R_jupiter'");
  app->add_option("--radius-b", o.radius_b, "Radius of body B");
  app->add_option("--temp-a", o.temp_a, "Temperature of body A, e.g. '1210 K'");
  app->add_option("--temp-b", o.temp_b, "Temperature of body B");
  app->add_option("--separation", o.separation, "Centre separation d, e.g. '3 AU'");
  app->add_option("--distance", o.distance, "Distance to the system D, e.g. '6.51 ly'");
  app->add_option("--magnitude", o.magnitude, "Apparent V magnitude");
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", o.out, "Output file; the manifest goes to <out>.manifest.json");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Intensity-interferometry calculator for binary thermal sources", "hbt"};
  app.require_subcommand(1);

  auto* curve = app.add_subcommand("curve", "Sample gamma2 against baseline");
  add_system_flags(curve, o);
  curve->add_option("--nu", o.nu, "Observation frequency (Hz or with unit)")->required();
  curve->add_option("--alpha", o.alpha, "Orbital phase angle (rad)");
  curve->add_option("--grid", o.grid, "Baselines start:stop:points[:log] in metres");
  add_format(curve, o);

  auto* features = app.add_subcommand("features", "Closed-form and extracted curve features");
  add_system_flags(features, o);
  features->add_option("--nu", o.nu, "Observation frequency")->required();
  features->add_option("--alpha", o.alpha, "Orbital phase angle (rad)");
  features->add_option("--grid", o.grid, "Sample a curve on this grid and extract features too");
  add_format(features, o);

  auto* decide = app.add_subcommand("decide", "Pick the measurement strategy");
  add_system_flags(decide, o);
  decide->add_option("--nu", o.nu, "Observation frequency")->required();
  add_format(decide, o);

  auto* estimate = app.add_subcommand("estimate", "Invert features into system parameters");
  add_system_flags(estimate, o);
  estimate->add_option("--nu", o.nu, "Observation frequency")->required();
  estimate->add_option("--alpha", o.alpha, "Orbital phase angle (rad) of the measurement");
  estimate->add_option("--gamma-min", o.gamma_min, "Measured first-minimum value");
  estimate->add_option("--gamma-inf", o.gamma_inf, "Measured plateau value");
  estimate->add_option("--x-osc", o.x_osc, "Measured first-minimum baseline");
  estimate->add_option("--x-asy", o.x_asy, "Measured decay baseline");
  add_format(estimate, o);

  auto* feas = app.add_subcommand("feasibility", "Photon rates and SNR budget");
  add_system_flags(feas, o);
  feas->add_option("--alpha", o.alpha, "Orbital phase angle (rad)");
  feas->add_option("--telescope-radius", o.telescope_radius, "Telescope radius")->capture_default_str();
  feas->add_option("--efficiency", o.efficiency, "Detector quantum efficiency")->capture_default_str();
  feas->add_option("--filter-center", o.filter_center, "Filter centre wavelength")->capture_default_str();
  feas->add_option("--filter-width", o.filter_width, "Filter bandwidth")->capture_default_str();
  feas->add_option("--dead-time", o.dead_time, "Detector dead time")->required();
  feas->add_option("--attenuation", o.attenuation, "Attenuation factor in (0, 1]");
  feas->add_option("--attenuated-rate", o.attenuated_rate, "Attenuate down to this photon rate (1/s)");
  feas->add_option("--reference-flux", o.reference_flux, "V-band zero-point flux (W m^-2 nm^-1)");
  feas->add_option("--photon-flux-per-hz", o.photon_flux_per_hz,
                   "Photon flux per unit bandwidth (1/(s m^2 Hz)) for the SNR formula");
  feas->add_option("--target-snr", o.target_snr, "SNR to reach")->capture_default_str();
  feas->add_option("--exposure", o.exposure, "Exposure for the reported SNR")->capture_default_str();
  feas->add_option("--baseline", o.baseline, "Baseline (default: first oscillation minimum)");
  feas->add_option("--binning-time", o.binning_time, "Coincidence bin width")->capture_default_str();
  add_format(feas, o);

  auto* verify = app.add_subcommand("verify", "Run the oracle verification suites");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"mc", "quadrature", "determinant", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for randomised checks");
  verify->add_option("--samples", o.samples, "Monte-Carlo samples per configuration")->capture_default_str();
  verify->add_option("--workers", o.workers, "Monte-Carlo worker threads (0: hardware)");
  verify->add_option("--out", o.out, "Output file; the manifest goes to <out>.manifest.json");

  auto* catalog = app.add_subcommand("catalog", "Inspect the system catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List system names");
  auto* show = catalog->add_subcommand("show", "Show one entry");
  show->add_option("name", o.name, "System name")->required();

  std::vector<std::string> argv_store{"hbt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    Output result;
    int code = kOk;
    if (*curve) cmd_curve(o, result);
    else if (*features) cmd_features(o, result);
    else if (*decide) cmd_decide(o, result);
    else if (*estimate) cmd_estimate(o, result);
    else if (*feas) cmd_feasibility(o, result);
    else if (*verify) code = cmd_verify(o, result);
    else if (*list) cmd_catalog_list(result);
    else if (*show) cmd_catalog_show(o, result);
    emit(o, result, out, err);
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace hbt::cli
