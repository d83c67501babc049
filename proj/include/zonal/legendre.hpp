#ifndef ZONAL_LEGENDRE_HPP
#define ZONAL_LEGENDRE_HPP

#include <functional>
#include <span>
#include <vector>

// Dimension-n Legendre polynomials (Gegenbauer polynomials normalized to
// P_k(1) = 1), spherical-harmonic dimensions, and Gauss-Jacobi quadrature
// for the weight (1-t^2)^{(n-3)/2} that represents the pushforward of the
// rotation-invariant probability measure on the sphere under u -> u.e.

namespace zonal {

/// dim of the space of spherical harmonics of dimension n and degree k.
long long harmonic_dim(int n, int k);

/// P_k^n(t), evaluated by the three-term recurrence
/// (k+n-2) P_{k+1} = (2k+n-2) t P_k - k P_{k-1}, P_0 = 1, P_1 = t.
double legendre_eval(int n, int k, double t);

/// All values P_0^n(t) .. P_K^n(t) in one recurrence pass.
std::vector<double> legendre_row(int n, int max_degree, double t);

/// Nodes and weights for int_{-1}^{1} f(x) (1-x)^alpha (1+x)^beta dx.
/// Weights sum to the full weight integral (not normalized).
struct JacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

JacobiRule gauss_jacobi(double alpha, double beta, int point_count);

/// int_{-1}^{1} (1-t^2)^{(n-3)/2} dt = sqrt(pi) Gamma((n-1)/2) / Gamma(n/2).
double weight_integral(int n);

/// Quadrature rule for the weight (1-t^2)^{(n-3)/2}, with weights normalized
/// to sum to 1, plus a cached table of P_k^n at the nodes.  Profiles expanded
/// against a basis of max degree K are integrated exactly for polynomial
/// integrands of degree <= 2*node_count - 1.
class LegendreBasis {
 public:
  /// node_count = 0 picks the default max(64, 4*max_degree).
  LegendreBasis(int dimension, int max_degree, int node_count = 0);

  int dimension() const { return dimension_; }
  int max_degree() const { return max_degree_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// P_k^n at node i, from the cached table.
  double node_poly(int k, int i) const { return poly_table_[k][i]; }

  /// Funk-Hecke multiplier a_k[g] = <g, P_k>_w / <1, 1>_w of a zonal kernel,
  /// so that a_k of the uniform kernel g == 1 is delta_{k0} and convolution
  /// with the Dirac mass at the pole has multiplier 1 for every k.
  double multiplier(const std::function<double(double)>& kernel, int k) const;
  double multiplier(std::span<const double> samples, int k) const;

 private:
  int dimension_;
  int max_degree_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<std::vector<double>> poly_table_;  // [k][node]
};

}  // namespace zonal

#endif
