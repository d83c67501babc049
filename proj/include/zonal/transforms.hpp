#ifndef ZONAL_TRANSFORMS_HPP
#define ZONAL_TRANSFORMS_HPP

#include <functional>
#include <vector>

#include "zonal/profile.hpp"

// Multiplier sequences of the named transforms on zonal functions: the
// spherical Fourier transform of negative degree, the spherical cosine and
// Radon transforms, the Christoffel operator and its Berg inverse, and the
// mean-section kernel.  All multipliers follow the probability-measure
// normalization fixed in legendre.hpp: the multiplier of the Dirac mass at
// the pole is 1 in every degree.

namespace zonal {

/// kappa(m) = pi^{m/2} / Gamma(m/2 + 1), the volume of the unit ball in R^m,
/// Gamma-extended to real m > -2 (kappa(0) = 1, kappa(-1) = 1/pi).
double kappa(double m);

/// m * kappa(m), the surface area of the unit ball in R^m.
double ball_surface(double m);

/// Multiplier of the spherical Fourier transform of degree p in (-n, 0) on
/// even degree k:  pi^{n/2} 2^{n+p} (-1)^{k/2} Gamma((k+n+p)/2) / Gamma((k-p)/2).
double fourier_multiplier(int n, double p, int k);

/// (1-k)(k+n-1)/(n-1): the support-function -> first-order-area-measure
/// operator (identity plus normalized spherical Laplacian).  n >= 2.
double box_multiplier(int n, int k);

/// Inverse sequence of box_multiplier with the degree-1 kernel: 0 at k = 1,
/// (n-1)/((1-k)(k+n-1)) otherwise.  n >= 2.
double berg_multiplier(int n, int k);

/// Multiplier of the kernel |t| (spherical cosine transform).  Zero for odd k.
double cosine_multiplier(int n, int k);

/// Multiplier of the spherical Radon transform, P_k^n(0).  Zero for odd k.
double radon_multiplier(int n, int k);

/// Berg's function g_j on (-1, 1) in closed form; supported for j in {2,3,4}.
/// Unbounded as t -> 1 for j >= 3.
double berg_function(int j, double t);

/// Funk-Hecke multiplier a_k^n[g_j] of the dimension-j Berg function as a
/// zonal kernel on S^{n-1}.  For j == n this is berg_multiplier(n, k); for
/// j in {2,3,4} it is computed from the closed form; for larger j it is
/// available when n - j is even.
double berg_kernel_multiplier(int n, int j, int k);

/// q_{n,j} = (j-1)/(2 pi (n+1-j)) * kappa_{j-1} kappa_{j-2} kappa_{n-j}
///           / (kappa_{j-3} kappa_{n-2}),  with Gamma-extended kappas.
double mean_section_factor(int n, int j);

MultiplierOperator fourier_operator(int n, double p, int max_degree);
MultiplierOperator cosine_operator(int n, int max_degree);
MultiplierOperator radon_operator(int n, int max_degree);
MultiplierOperator box_operator(int n, int max_degree);
MultiplierOperator berg_operator(int n, int max_degree);

/// Generating kernel of the mean-section map: q_{n,j} times convolution with
/// the dimension-j Berg function on S^{n-1}.  Requires 2 <= j <= n.
MultiplierOperator mean_section_kernel(int n, int j, int max_degree);

struct IdentityReport {
  int n = 0;
  int j = 0;
  std::vector<int> degrees;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> rel_err;
  double max_rel_err = 0.0;
};

/// Cross-checks the Fourier multipliers of degree -j against the factored
/// route cosine-after-inverse-Berg: for even k <= max_degree, compares
///   fourier_multiplier(n, -j, k)
/// with
///   c(n,j) * cosine_multiplier(n,k) / berg_kernel_multiplier(n, j+1, k),
///   c(n,j) = (j+1)kappa_{j+1} * (2pi)^{n-j} j (j+1) kappa_{j+1}
///            / (4 (n-j) n kappa_n) / q_{n,j+1}.
/// The two routes share no code path beyond the quadrature rules, so this is
/// the master calibration of the kernel normalizations.
IdentityReport verify_corollary_39(int n, int j, int max_degree);

/// The dimension-4 line-to-plane Radon transform of a zonal profile,
///   (2/pi) * int_0^1 f(xi * t) (1 - t^2)^{-1/2} dt,
/// where xi is the cosine of the angle between the plane and the axis.
/// Chebyshev-Gauss quadrature with point_count nodes.
double radon_r12_dim4(const std::function<double(double)>& f, double xi,
                      int point_count = 256);

}  // namespace zonal

#endif
