#include "zonal/legendre.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace zonal {

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

long long harmonic_dim(int n, int k) {
  if (n < 3 || k < 0) {
    throw std::invalid_argument("harmonic_dim: need n >= 3 and k >= 0");
  }
  long long first = binomial(n + k - 1, k);
  long long second = k >= 2 ? binomial(n + k - 3, k - 2) : 0;
  return first - second;
}

double legendre_eval(int n, int k, double t) {
  if (n < 3 || k < 0) {
    throw std::invalid_argument("legendre_eval: need n >= 3 and k >= 0");
  }
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int m = 1; m < k; ++m) {
    double next = ((2 * m + n - 2) * t * cur - m * prev) / (m + n - 2);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> legendre_row(int n, int max_degree, double t) {
  if (n < 3 || max_degree < 0) {
    throw std::invalid_argument("legendre_row: need n >= 3 and max_degree >= 0");
  }
  std::vector<double> row(max_degree + 1);
  row[0] = 1.0;
  if (max_degree >= 1) row[1] = t;
  for (int m = 1; m < max_degree; ++m) {
    row[m + 1] = ((2 * m + n - 2) * t * row[m] - m * row[m - 1]) / (m + n - 2);
  }
  return row;
}

JacobiRule gauss_jacobi(double alpha, double beta, int point_count) {
  if (alpha <= -1.0 || beta <= -1.0) {
    throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1");
  }
  if (point_count < 1) {
    throw std::invalid_argument("gauss_jacobi: need at least one point");
  }
  const int m = point_count;
  const double s = alpha + beta;

  // Golub-Welsch: eigen-decompose the Jacobi matrix of the monic recurrence.
  Eigen::VectorXd diag(m);
  Eigen::VectorXd off(m > 1 ? m - 1 : 0);
  diag[0] = (beta - alpha) / (s + 2.0);
  for (int k = 1; k < m; ++k) {
    double d = (2.0 * k + s) * (2.0 * k + s + 2.0);
    diag[k] = (beta * beta - alpha * alpha) / d;
  }
  for (int k = 1; k < m; ++k) {
    double bk;
    if (k == 1) {
      bk = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
    } else {
      bk = 4.0 * k * (k + alpha) * (k + beta) * (k + s) /
           ((2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) * (2.0 * k + s - 1.0));
    }
    off[k - 1] = std::sqrt(bk);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi: tridiagonal eigensolve failed for " +
                             std::to_string(m) + " points");
  }

  double mu0 = std::exp((s + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                        std::lgamma(beta + 1.0) - std::lgamma(s + 2.0));
  JacobiRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

double weight_integral(int n) {
  return std::exp(0.5 * std::log(M_PI) + std::lgamma(0.5 * (n - 1)) -
                  std::lgamma(0.5 * n));
}

LegendreBasis::LegendreBasis(int dimension, int max_degree, int node_count)
    : dimension_(dimension), max_degree_(max_degree) {
  if (dimension < 3) {
    throw std::invalid_argument("LegendreBasis: dimension must be >= 3");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("LegendreBasis: max_degree must be >= 0");
  }
  if (node_count == 0) {
    node_count = std::max(64, 4 * max_degree);
  }
  // Exactness for polynomial integrands of degree <= 2K + 8.
  if (node_count < max_degree + 5) {
    throw std::invalid_argument("LegendreBasis: node_count too small for degree " +
                                std::to_string(max_degree));
  }

  double alpha = 0.5 * (dimension - 3);
  JacobiRule rule = gauss_jacobi(alpha, alpha, node_count);
  nodes_ = std::move(rule.nodes);
  weights_ = std::move(rule.weights);

  double total = 0.0;
  for (double w : weights_) total += w;
  if (!std::isfinite(total) || total <= 0.0) {
    throw std::runtime_error("LegendreBasis: quadrature weights did not converge");
  }
  for (double& w : weights_) w /= total;

  poly_table_.assign(max_degree + 1, std::vector<double>(nodes_.size()));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::vector<double> row = legendre_row(dimension_, max_degree_, nodes_[i]);
    for (int k = 0; k <= max_degree_; ++k) poly_table_[k][i] = row[k];
  }
}

double LegendreBasis::multiplier(const std::function<double(double)>& kernel,
                                 int k) const {
  if (k < 0 || k > max_degree_) {
    throw std::invalid_argument("multiplier: degree outside basis range");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double g = kernel(nodes_[i]);
    if (!std::isfinite(g)) {
      throw std::runtime_error("multiplier: kernel not finite at node t = " +
                               std::to_string(nodes_[i]));
    }
    acc += weights_[i] * g * poly_table_[k][i];
  }
  return acc;
}

double LegendreBasis::multiplier(std::span<const double> samples, int k) const {
  if (k < 0 || k > max_degree_) {
    throw std::invalid_argument("multiplier: degree outside basis range");
  }
  if (samples.size() != nodes_.size()) {
    throw std::invalid_argument("multiplier: sample count does not match nodes");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw std::runtime_error("multiplier: sample not finite at node t = " +
                               std::to_string(nodes_[i]));
    }
    acc += weights_[i] * samples[i] * poly_table_[k][i];
  }
  return acc;
}

}  // namespace zonal
