#include "hbt/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hbt/errors.hpp"

namespace hbt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimit = 8.0;
constexpr double kRecurrenceLimit = 25.0;

double j1_series(double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = half;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's backward recurrence normalised with J0 + 2*sum(J_2k) = 1.
double j1_recurrence(double x) {
  const int start = 2 * (static_cast<int>(x / 2.0) + 30);
  const double two_over_x = 2.0 / x;
  double j_next = 0.0;
  double j_curr = 1e-30;
  double norm = 0.0;
  double j1 = 0.0;
  for (int n = start; n > 0; --n) {
    const double j_prev = n * two_over_x * j_curr - j_next;
    j_next = j_curr;
    j_curr = j_prev;
    if (std::abs(j_curr) > 1e250) {
      j_curr *= 1e-250;
      j_next *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
    // j_curr now holds J_{n-1}.
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * j_curr;
    if (n - 1 == 1) j1 = j_curr;
  }
  norm += j_curr;  // J0
  return j1 / norm;
}

// Hankel asymptotic expansion, truncated at the smallest term.
double j1_asymptotic(double x) {
  constexpr double mu = 4.0;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double magnitude = std::abs(term);
    if (magnitude > previous) break;
    previous = magnitude;
    // Sign pattern (-1)^floor(k/2) for P (even k) and Q (odd k).
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (magnitude < 1e-17) break;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double cos_chi = (s - c) / std::numbers::sqrt2;
  const double sin_chi = -(s + c) / std::numbers::sqrt2;
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

void require_disc_args(double radius, double k) {
  detail::require(std::isfinite(radius) && radius > 0.0, "disc radius must be positive");
  detail::require(std::isfinite(k) && k >= 0.0, "wavenumber must be non-negative");
}

template <typename Kernel>
double adaptive_disc_integral(double radius, double k, const QuadratureSpec& spec,
                              Kernel kernel) {
  validate(spec);
  constexpr int kMaxLevels = 7;
  const double tolerance = spec.target_abs_tol * kPi * radius * radius;
  double previous = 0.0;
  for (int level = 0; level < kMaxLevels; ++level) {
    const int nr = spec.radial_nodes << level;
    const int nt = spec.angular_nodes << level;
    const auto rule = gauss_legendre(nr);
    const double dtheta = 2.0 * kPi / nt;
    double total = 0.0;
    for (int i = 0; i < nr; ++i) {
      const double r = 0.5 * radius * (rule.nodes[i] + 1.0);
      double ring = 0.0;
      for (int j = 0; j < nt; ++j) ring += kernel(k * r * std::cos(j * dtheta));
      total += 0.5 * radius * rule.weights[i] * r * ring * dtheta;
    }
    if (level > 0 && std::abs(total - previous) <= tolerance) return total;
    previous = total;
  }
  throw ConvergenceError("disc quadrature did not converge to " +
                         std::to_string(spec.target_abs_tol) + " (k*R = " +
                         std::to_string(k * radius) + ")");
}

}  // namespace

double bessel_j1(double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j1 requires a finite argument");
  const double ax = std::abs(x);
  double value;
  if (ax <= kSeriesLimit) {
    value = j1_series(ax);
  } else if (ax <= kRecurrenceLimit) {
    value = j1_recurrence(ax);
  } else {
    value = j1_asymptotic(ax);
  }
  return x < 0.0 ? -value : value;
}

double bessel_envelope(double u) {
  const double au = std::abs(u);
  if (au < 1e-6) return 1.0 - au * au / 8.0;
  return 2.0 * bessel_j1(au) / au;
}

double bessel_j1_first_zero() {
  static const double zero = [] {
    double lo = 3.0;
    double hi = 4.0;
    // J1 changes sign from + to - across the root.
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (bessel_j1(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return zero;
}

GaussLegendreRule gauss_legendre(int n) {
  detail::require(n >= 1, "Gauss-Legendre order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

void validate(const QuadratureSpec& spec) {
  detail::require(spec.radial_nodes >= 8, "radial_nodes must be at least 8");
  detail::require(spec.angular_nodes >= 16, "angular_nodes must be at least 16");
  detail::require(spec.target_abs_tol > 0.0, "quadrature tolerance must be positive");
}

double disc_cosine_integral(double radius, double k, const QuadratureSpec& spec) {
  require_disc_args(radius, k);
  validate(spec);
  if (k == 0.0) return kPi * radius * radius;
  return adaptive_disc_integral(radius, k, spec, [](double phase) { return std::cos(phase); });
}

double disc_sine_integral(double radius, double k, const QuadratureSpec& spec) {
  require_disc_args(radius, k);
  validate(spec);
  if (k == 0.0) return 0.0;
  return adaptive_disc_integral(radius, k, spec, [](double phase) { return std::sin(phase); });
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
  detail::require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
                  "minimization bracket must satisfy lo < hi");
  detail::require(tol > 0.0, "minimization tolerance must be positive");
  constexpr double kInvPhi = 0.6180339887498949;
  const double width = tol * (hi - lo);
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  if (fc <= fd) return {c, fc};
  return {d, fd};
}

}  // namespace hbt
