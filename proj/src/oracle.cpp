#include "hbt/oracle.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "hbt/constants.hpp"
#include "hbt/errors.hpp"
#include "hbt/radiometry.hpp"

namespace hbt {
namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct BlockSums {
  double i1 = 0.0;
  double i2 = 0.0;
  double i12 = 0.0;
  std::uint64_t count = 0;
};

// Box-Muller on the generator's top 53 bits; u1 in (0, 1], u2 in [0, 1).
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  std::array<double, 2> pair() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  std::mt19937_64 engine_;
};

BlockSums run_block(std::uint64_t seed, int block, std::uint64_t count, double n1, double n2,
                    std::complex<double> fringe) {
  GaussianSource gauss(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(block) + 1)));
  const double scale1 = std::sqrt(0.5 * n1);
  const double scale2 = std::sqrt(0.5 * n2);
  CompensatedSum s1;
  CompensatedSum s2;
  CompensatedSum s12;
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto g1 = gauss.pair();
    const auto g2 = gauss.pair();
    const std::complex<double> v1(scale1 * g1[0], scale1 * g1[1]);
    const std::complex<double> v2(scale2 * g2[0], scale2 * g2[1]);
    const double intensity1 = std::norm(v1 + v2);
    const double intensity2 = std::norm(v1 + v2 * fringe);
    s1.add(intensity1);
    s2.add(intensity2);
    s12.add(intensity1 * intensity2);
  }
  return {s1.value(), s2.value(), s12.value(), count};
}

struct DiscNodes {
  std::vector<double> weight;
  std::vector<double> projection;  // offset along the baseline direction
};

DiscNodes disc_nodes(double radius, double centre, int radial, int angular) {
  const GaussLegendreRule rule = gauss_legendre(radial);
  DiscNodes nodes;
  nodes.weight.reserve(static_cast<std::size_t>(radial) * angular);
  nodes.projection.reserve(nodes.weight.capacity());
  const double dtheta = 2.0 * kPi / angular;
  for (int i = 0; i < radial; ++i) {
    const double r = 0.5 * radius * (rule.nodes[i] + 1.0);
    const double w = 0.5 * radius * rule.weights[i] * r * dtheta;
    for (int j = 0; j < angular; ++j) {
      nodes.weight.push_back(w);
      nodes.projection.push_back(centre + r * std::cos(j * dtheta));
    }
  }
  return nodes;
}

double pair_block(const DiscNodes& first, const DiscNodes& second, double occupation_ratio,
                  double k) {
  double total = 0.0;
  for (std::size_t p = 0; p < first.weight.size(); ++p) {
    double row = 0.0;
    for (std::size_t q = 0; q < second.weight.size(); ++q) {
      row += second.weight[q] *
             gamma2_two_sources(occupation_ratio, k * (first.projection[p] - second.projection[q]));
    }
    total += first.weight[p] * row;
  }
  return total;
}

double surface_average(const BinarySystem& system, double n_ratio, double k, double scale,
                       const QuadratureSpec& spec) {
  const double ra = system.body_a().radius;
  const double rb = system.body_b().radius;
  const auto counts = [&](double radius) {
    const double kr = k * radius;
    const int radial = static_cast<int>(std::ceil(scale * std::max<double>(spec.radial_nodes, 8 + kr / 2)));
    const int angular =
        static_cast<int>(std::ceil(scale * std::max<double>(spec.angular_nodes, 16 + 2 * kr)));
    return std::pair{radial, angular};
  };
  const auto [nra, nta] = counts(ra);
  const auto [nrb, ntb] = counts(rb);
  const DiscNodes a = disc_nodes(ra, 0.0, nra, nta);
  const DiscNodes b = disc_nodes(rb, system.separation(), nrb, ntb);
  const double area_a = kPi * ra * ra;
  const double area_b = kPi * rb * rb;
  const double sum = pair_block(a, a, 1.0, k) + pair_block(a, b, n_ratio, k) +
                     pair_block(b, a, 1.0 / n_ratio, k) + pair_block(b, b, 1.0, k);
  return sum / ((area_a + area_b) * (area_a + area_b));
}

}  // namespace

void validate(const McConfig& cfg) {
  detail::require(cfg.samples >= 10'000, "Monte-Carlo needs at least 1e4 samples");
  detail::require(cfg.workers >= 1, "Monte-Carlo needs at least one worker");
}

McEstimate mc_gamma2_two_sources(double n1, double n2, double phase, const McConfig& cfg) {
  detail::require(std::isfinite(n1) && n1 > 0.0 && std::isfinite(n2) && n2 > 0.0,
                  "occupations must be positive");
  detail::require(std::isfinite(phase), "phase must be finite");
  validate(cfg);

  const std::complex<double> fringe = std::polar(1.0, phase);
  std::vector<BlockSums> blocks(kJackknifeBlocks);
  const std::uint64_t base = cfg.samples / kJackknifeBlocks;
  const std::uint64_t extra = cfg.samples % kJackknifeBlocks;
  const auto work = [&](unsigned worker) {
    for (int b = static_cast<int>(worker); b < kJackknifeBlocks; b += static_cast<int>(cfg.workers)) {
      const std::uint64_t count = base + (static_cast<std::uint64_t>(b) < extra ? 1 : 0);
      blocks[b] = run_block(cfg.seed, b, count, n1, n2, fringe);
    }
  };
  if (cfg.workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(cfg.workers);
    for (unsigned w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
  }

  BlockSums total;
  for (const auto& b : blocks) {
    total.i1 += b.i1;
    total.i2 += b.i2;
    total.i12 += b.i12;
    total.count += b.count;
  }
  const auto ratio = [](double i1, double i2, double i12, double n) {
    return (i12 / n) / ((i1 / n) * (i2 / n));
  };
  const double n_total = static_cast<double>(total.count);
  const double estimate = ratio(total.i1, total.i2, total.i12, n_total);

  std::vector<double> leave_out(kJackknifeBlocks);
  double mean = 0.0;
  for (int b = 0; b < kJackknifeBlocks; ++b) {
    const auto& blk = blocks[b];
    leave_out[b] = ratio(total.i1 - blk.i1, total.i2 - blk.i2, total.i12 - blk.i12,
                         n_total - static_cast<double>(blk.count));
    mean += leave_out[b];
  }
  mean /= kJackknifeBlocks;
  double spread = 0.0;
  for (double v : leave_out) spread += (v - mean) * (v - mean);
  const double variance =
      static_cast<double>(kJackknifeBlocks - 1) / kJackknifeBlocks * spread;
  return {estimate, std::sqrt(variance)};
}

QuadratureEstimate quadrature_gamma2_binary(const BinarySystem& system, double frequency,
                                            double baseline, const QuadratureSpec& spec) {
  validate(spec);
  detail::require(std::isfinite(baseline) && baseline >= 0.0, "baseline must be non-negative");
  const Occupation na = mean_photon_number(frequency, system.body_a().temperature);
  const Occupation nb = mean_photon_number(frequency, system.body_b().temperature);
  const double n_ratio = occupation_ratio(na, nb);
  const double k =
      2.0 * kPi * frequency * baseline / (kConstants.c * system.observer_distance());

  constexpr int kMaxLevels = 6;
  double previous = surface_average(system, n_ratio, k, 1.0, spec);
  double scale = 1.0;
  for (int level = 1; level < kMaxLevels; ++level) {
    scale *= 1.5;
    const double current = surface_average(system, n_ratio, k, scale, spec);
    const double change = std::abs(current - previous);
    if (change <= spec.target_abs_tol) return {current, change};
    previous = current;
  }
  throw ConvergenceError("surface-average quadrature did not converge");
}

DeterminantCheck gaussian_determinant_identity(double a11, double a22, std::complex<double> a12,
                                               double n1, double n2) {
  detail::require(n1 > 0.0 && n2 > 0.0, "occupations must be positive");
  detail::require(1.0 / n1 - a11 > 0.0 && 1.0 / n2 - a22 > 0.0,
                  "Gaussian integral diverges: need 1/n_l - A_ll > 0");
  const double p = 2.0 * (1.0 / n1 - a11);
  const double q = 2.0 * (1.0 / n2 - a22);
  const double re = a12.real();
  const double im = a12.imag();

  Eigen::Matrix4d m;
  m << p, 0.0, -2.0 * re, -2.0 * im,
       0.0, p, 2.0 * im, -2.0 * re,
       -2.0 * re, 2.0 * im, q, 0.0,
       -2.0 * im, -2.0 * re, 0.0, q;
  const double lhs = m.partialPivLu().determinant();

  const double inner =
      4.0 * ((1.0 - a11 * n1) * (1.0 - a22 * n2) - n1 * n2 * std::norm(a12)) / (n1 * n2);
  const double rhs = inner * inner;

  // Z = (pi^2 n1 n2)^-1 * sqrt((2 pi)^4 / det) = 4 / (n1 n2 sqrt(det)).
  const double z = lhs > 0.0 ? 4.0 / (n1 * n2 * std::sqrt(lhs))
                             : std::numeric_limits<double>::quiet_NaN();
  return {lhs, rhs, z};
}

}  // namespace hbt
