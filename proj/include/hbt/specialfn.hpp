#pragma once

#include <functional>
#include <vector>

namespace hbt {

/// Bessel function of the first kind, order one. Absolute error below 1e-12
/// for |x| <= 1e4; exactly odd. Throws DomainError for non-finite x.
double bessel_j1(double x);

/// Airy-type envelope 2*J1(u)/u, continuous through u = 0 where it equals 1.
double bessel_envelope(double u);

/// First positive zero of J1 (3.8317059702...).
double bessel_j1_first_zero();

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Disc quadrature settings: Gauss-Legendre in radius, trapezoid in angle.
/// Node counts are doubled until successive estimates agree within
/// target_abs_tol * (pi R^2).
struct QuadratureSpec {
  int radial_nodes = 16;
  int angular_nodes = 32;
  double target_abs_tol = 1e-10;
};

void validate(const QuadratureSpec& spec);

/// Integral over the disc of radius R of cos(k r cos(theta)) r dr dtheta.
double disc_cosine_integral(double radius, double k, const QuadratureSpec& spec = {});

/// Same with sin; vanishes by the theta -> pi - theta symmetry.
double disc_sine_integral(double radius, double k, const QuadratureSpec& spec = {});

struct ScalarMinimum {
  double x;
  double value;
};

/// Golden-section search on [lo, hi] with |x error| <= tol * (hi - lo).
/// Ties resolve toward the smaller abscissa, so flat plateaus return their
/// left edge.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double tol = 1e-10);

}  // namespace hbt
