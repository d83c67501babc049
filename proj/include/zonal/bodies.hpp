#ifndef ZONAL_BODIES_HPP
#define ZONAL_BODIES_HPP

#include <string>
#include <vector>

#include "zonal/profile.hpp"
#include "zonal/transforms.hpp"

// Area-measure densities of convex bodies of revolution: Firey's
// integral conditions, the quadratic perturbation family, partner densities
// under the degree -j Fourier multipliers, the radial/area-measure duality
// maps, and the dimension-4 counterexample certificate.

namespace zonal {

/// Density of the order-j area measure of a body of revolution, as a zonal
/// profile in t = e.u relative to the invariant probability measure.
struct AreaMeasureDensity {
  int dimension = 0;
  int order = 0;  // 1 <= order <= dimension - 1
  ZonalProfile profile;
};

AreaMeasureDensity make_area_density(int dimension, int order,
                                     ZonalProfile profile);

/// Report of Firey's conditions for s to be the order-j area-measure density
/// of a strictly convex body of revolution (valid for 1 <= j <= n-2):
///   (i)   s continuous with finite endpoint limits (automatic here: profiles
///         are band-limited polynomials);
///   (ii)  G(t) = int_t^1 x s(x) (1-x^2)^{(n-3)/2} dx > 0 on (-1,1), G(-1)=0;
///   (iii) s(t) (1-t^2)^{(n-1)/2} > (n-1-j) G(t) on (-1,1).
/// Both sides of (ii) and (iii) vanish like (1-t^2)^{(n-1)/2} at the poles,
/// so pass/fail is decided on the weight-normalized quantities, whose
/// endpoint limits are s(1)/(n-1) resp. s(1) j/(n-1) (same at t = -1).
struct FireyReport {
  bool passed = false;
  double moment_min_interior = 0.0;   // min of G over the interior grid
  double moment_at_minus1 = 0.0;      // G(-1); vanishes for even densities
  double strict_margin = 0.0;         // min of s(t)(1-t^2)^{(n-1)/2}-(n-1-j)G(t)
  double moment_min_normalized = 0.0; // min of G/(1-t^2)^{(n-1)/2}, with limits
  double margin_min_normalized = 0.0; // min of the normalized (iii) margin
  std::vector<double> grid;
};

FireyReport firey_check(const AreaMeasureDensity& density, double tol = 1e-9);

/// Density 1 + lambda P_2^n as an order-j area-measure candidate.
AreaMeasureDensity quadratic_density(int n, int j, double lambda);

struct LambdaInterval {
  double lo = 0.0;
  double hi = 0.0;
  std::string lo_binding;  // which Firey condition fails just beyond lo
  std::string hi_binding;
};

/// Maximal open interval of lambda for which quadratic_density(n, j, lambda)
/// passes firey_check, found by bisection.
LambdaInterval admissible_lambda_range(int n, int j, double tol = 1e-7);

/// Order-(n-j) partner density (n-j)/((2 pi)^{n-j} j) * F_{-j} s.  Existence
/// of an actual convex body is not asserted; combine with firey_check (order
/// <= n-2) or positivity (order n-1).
AreaMeasureDensity projection_partner(const AreaMeasureDensity& density);

/// Interval of lambda for which quadratic_density(n, j, lambda) is
/// Firey-certified AND its projection partner is a certified density.
LambdaInterval jproj_membership_lambda(int n, int j, double tol = 1e-7);

/// True if the density passes the certificate appropriate for its order:
/// firey_check for order <= n-2, strict positivity (plus the automatic even
/// centroid condition) for order n-1.
bool certified_density(const AreaMeasureDensity& density);

/// Same multiplier map on j-th powers of radial functions: sends rho(D,.)^j
/// to rho(M,.)^{n-j} of the intersection partner.  Positivity of the result
/// is the caller's check (see profile_min_on_grid).
ZonalProfile intersection_partner(const ZonalProfile& radial_power_j, int n,
                                  int j);

/// Pointwise power maps between radial profiles and area-measure densities:
/// forward sends a positive radial profile rho to the order-j density rho^j,
/// inverse takes the j-th root.  They are mutually inverse on positive
/// profiles.
AreaMeasureDensity radial_to_density(const ZonalProfile& radial, int j,
                                     int out_degree = -1);
ZonalProfile density_to_radial(const AreaMeasureDensity& density,
                               int out_degree = -1);

/// Minimum of a profile over the standard Chebyshev grid plus endpoints.
double profile_min_on_grid(const ZonalProfile& profile, int points = 512);

/// Certificate for the quartic revolution body in R^4 with order-2 density
/// 3/2 + eps - 6 t^2 + 8 t^4:
///  (a) the density is Firey-certified (strictly convex body of revolution),
///  (b) it is its own projection partner (the body is a 2-projection body of
///      a dilate of itself),
///  (c) yet the plane-projection Crofton profile, obtained by inverting the
///      spherical Radon transform and applying the line-to-plane transform,
///      is negative somewhere, so the projection function has no nonnegative
///      Crofton representation.
struct CounterexampleCertificate {
  double epsilon = 0.0;
  FireyReport firey;
  double partner_coeff_gap = 0.0;
  bool self_partner = false;
  double min_normalized = 0.0;   // min over xi of (pi/2) * transform value
  double argmin_xi = 0.0;
  double value_at_invsqrt2 = 0.0;
  double closed_form_max_err = 0.0;  // vs 15pi/2 x^2(x^2-1) + 7pi/4 + pi eps/2
  bool negative_somewhere = false;
  bool passed = false;
};

CounterexampleCertificate dim4_counterexample(double epsilon,
                                              int xi_points = 2001);

}  // namespace zonal

#endif
