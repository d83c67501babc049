#include "zonal/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zonal {

namespace {

constexpr int kMaxFourierDegree = 32;  // Gamma ratios overflow near k ~ 60

// Gauss-Legendre rule on [0, pi], cached.  Used for the cross-dimensional
// Berg multipliers; in the theta variable those integrands are analytic up to
// an integrable log factor at the endpoint, so a fixed large rule reaches
// quadrature error well below 1e-11 for every supported case.
const JacobiRule& theta_rule() {
  static const JacobiRule rule = [] {
    JacobiRule r = gauss_jacobi(0.0, 0.0, 3000);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      r.nodes[i] = 0.5 * (r.nodes[i] + 1.0) * M_PI;
      r.weights[i] *= 0.5 * M_PI;
    }
    return r;
  }();
  return rule;
}

}  // namespace

double kappa(double m) {
  if (m <= -2.0) {
    throw std::invalid_argument("kappa: defined for m > -2");
  }
  return std::exp(0.5 * m * std::log(M_PI) - std::lgamma(0.5 * m + 1.0));
}

double ball_surface(double m) { return m * kappa(m); }

double fourier_multiplier(int n, double p, int k) {
  if (n < 3) {
    throw std::invalid_argument("fourier_multiplier: dimension must be >= 3");
  }
  if (!(p > -static_cast<double>(n) && p < 0.0)) {
    throw std::invalid_argument("fourier_multiplier: degree p must lie in (-n, 0)");
  }
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("fourier_multiplier: defined on even degrees only");
  }
  if (k > 2 * kMaxFourierDegree) {
    throw std::invalid_argument("fourier_multiplier: degree beyond supported range");
  }
  double lg = 0.5 * n * std::log(M_PI) + (n + p) * std::log(2.0) +
              std::lgamma(0.5 * (k + n + p)) - std::lgamma(0.5 * (k - p));
  double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::exp(lg);
}

double box_multiplier(int n, int k) {
  if (n < 2 || k < 0) {
    throw std::invalid_argument("box_multiplier: need n >= 2 and k >= 0");
  }
  return (1.0 - k) * (k + n - 1.0) / (n - 1.0);
}

double berg_multiplier(int n, int k) {
  if (n < 2 || k < 0) {
    throw std::invalid_argument("berg_multiplier: need n >= 2 and k >= 0");
  }
  if (k == 1) return 0.0;
  return (n - 1.0) / ((1.0 - k) * (k + n - 1.0));
}

double cosine_multiplier(int n, int k) {
  if (n < 3 || k < 0) {
    throw std::invalid_argument("cosine_multiplier: need n >= 3 and k >= 0");
  }
  if (k % 2 == 1) return 0.0;
  // 2 int_0^1 t P_k(t) (1-t^2)^a dt = int_0^1 P_k(sqrt(s)) (1-s)^a ds, and
  // P_k(sqrt(s)) is a polynomial of degree k/2 in s, so a small one-sided
  // Jacobi rule is exact despite the kink of |t| at the origin.
  double alpha = 0.5 * (n - 3);
  JacobiRule rule = gauss_jacobi(alpha, 0.0, k / 4 + 3);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double s = 0.5 * (rule.nodes[i] + 1.0);
    acc += rule.weights[i] * legendre_eval(n, k, std::sqrt(s));
  }
  return std::pow(2.0, -alpha - 1.0) * acc / weight_integral(n);
}

double radon_multiplier(int n, int k) {
  if (n < 3 || k < 0) {
    throw std::invalid_argument("radon_multiplier: need n >= 3 and k >= 0");
  }
  if (k % 2 == 1) return 0.0;
  return legendre_eval(n, k, 0.0);
}

double berg_function(int j, double t) {
  if (std::fabs(t) > 1.0) {
    throw std::invalid_argument("berg_function: argument outside [-1, 1]");
  }
  switch (j) {
    case 2: {
      double theta = std::acos(t);
      return (M_PI - theta) * std::sqrt(1.0 - t * t) - 0.5 * t;
    }
    case 3:
      return 2.0 + (8.0 / 3.0) * t + 2.0 * t * std::log(0.5 * (1.0 - t));
    case 4: {
      double theta = std::acos(t);
      return -1.5 * (M_PI - theta) * (2.0 * t * t - 1.0) /
                 std::sqrt(1.0 - t * t) +
             0.75 * t;
    }
    default:
      throw std::invalid_argument(
          "berg_function: closed form available for j in {2, 3, 4}");
  }
}

double berg_kernel_multiplier(int n, int j, int k) {
  if (n < 3 || j < 2 || k < 0) {
    throw std::invalid_argument(
        "berg_kernel_multiplier: need n >= 3, j >= 2, k >= 0");
  }
  if (j == n) return berg_multiplier(n, k);

  if ((n - j) % 2 == 0 && j >= 3) {
    // (1-t^2)^{(n-j)/2} is a polynomial, so the dimension-n integral reduces
    // exactly to the native dimension-j multipliers of g_j.
    int gap = (n - j) / 2;
    int degree = k + (n - j);
    LegendreBasis native(j, degree);
    std::vector<double> samples(native.node_count());
    for (int i = 0; i < native.node_count(); ++i) {
      double t = native.nodes()[i];
      samples[i] = legendre_eval(n, k, t) * std::pow(1.0 - t * t, gap);
    }
    ZonalProfile q = expand(native, samples);
    double acc = 0.0;
    for (int m = 0; m <= q.max_degree(); ++m) {
      acc += q.coeffs[m] * berg_multiplier(j, m);
    }
    return acc * weight_integral(j) / weight_integral(n);
  }

  if (j <= 4) {
    // a_k^n[g_j] = int_0^pi g_j(cos h) P_k^n(cos h) sin^{n-2} h dh / int w_n.
    const JacobiRule& rule = theta_rule();
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double theta = rule.nodes[i];
      double t = std::cos(theta);
      double g = berg_function(j, t);
      acc += rule.weights[i] * g * legendre_eval(n, k, t) *
             std::pow(std::sin(theta), n - 2);
    }
    return acc / weight_integral(n);
  }

  throw std::invalid_argument(
      "berg_kernel_multiplier: unsupported pair (n, j) = (" +
      std::to_string(n) + ", " + std::to_string(j) +
      "): need j <= 4, j == n, or even n - j");
}

double mean_section_factor(int n, int j) {
  if (j < 2 || j > n) {
    throw std::invalid_argument("mean_section_factor: need 2 <= j <= n");
  }
  return (j - 1.0) / (2.0 * M_PI * (n + 1.0 - j)) * kappa(j - 1.0) *
         kappa(j - 2.0) * kappa(n - j) / (kappa(j - 3.0) * kappa(n - 2.0));
}

namespace {

MultiplierOperator make_operator(const std::string& name, int n, int max_degree,
                                 ParityDomain domain,
                                 const std::function<double(int)>& entry) {
  MultiplierOperator op;
  op.name = name;
  op.dimension = n;
  op.domain = domain;
  op.multipliers.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) op.multipliers[k] = entry(k);
  return op;
}

}  // namespace

MultiplierOperator fourier_operator(int n, double p, int max_degree) {
  if (max_degree > kMaxFourierDegree) {
    throw std::invalid_argument("fourier_operator: max_degree capped at " +
                                std::to_string(kMaxFourierDegree));
  }
  return make_operator("fourier(" + std::to_string(p) + ")", n, max_degree,
                       ParityDomain::EvenOnly, [&](int k) {
                         return k % 2 == 0 ? fourier_multiplier(n, p, k) : 0.0;
                       });
}

MultiplierOperator cosine_operator(int n, int max_degree) {
  return make_operator("cosine", n, max_degree, ParityDomain::AllDegrees,
                       [&](int k) { return cosine_multiplier(n, k); });
}

MultiplierOperator radon_operator(int n, int max_degree) {
  return make_operator("radon", n, max_degree, ParityDomain::EvenOnly,
                       [&](int k) { return radon_multiplier(n, k); });
}

MultiplierOperator box_operator(int n, int max_degree) {
  return make_operator("box", n, max_degree, ParityDomain::AllDegrees,
                       [&](int k) { return box_multiplier(n, k); });
}

MultiplierOperator berg_operator(int n, int max_degree) {
  return make_operator("berg", n, max_degree, ParityDomain::AllDegrees,
                       [&](int k) { return berg_multiplier(n, k); });
}

MultiplierOperator mean_section_kernel(int n, int j, int max_degree) {
  if (j < 2 || j > n) {
    throw std::invalid_argument("mean_section_kernel: need 2 <= j <= n");
  }
  double q = mean_section_factor(n, j);
  return make_operator(
      "mean-section(" + std::to_string(j) + ")", n, max_degree,
      ParityDomain::AllDegrees,
      [&](int k) { return q * berg_kernel_multiplier(n, j, k); });
}

IdentityReport verify_corollary_39(int n, int j, int max_degree) {
  if (j < 1 || j > n - 1) {
    throw std::invalid_argument("verify_corollary_39: need 1 <= j <= n-1");
  }
  double c = ball_surface(j + 1.0) * std::pow(2.0 * M_PI, n - j) * j *
             (j + 1.0) * kappa(j + 1.0) /
             (4.0 * (n - j) * n * kappa(n)) / mean_section_factor(n, j + 1);
  IdentityReport report;
  report.n = n;
  report.j = j;
  for (int k = 0; k <= max_degree; k += 2) {
    double lhs = fourier_multiplier(n, -static_cast<double>(j), k);
    double rhs =
        c * cosine_multiplier(n, k) / berg_kernel_multiplier(n, j + 1, k);
    double rel = std::fabs(lhs - rhs) / std::fabs(lhs);
    report.degrees.push_back(k);
    report.lhs.push_back(lhs);
    report.rhs.push_back(rhs);
    report.rel_err.push_back(rel);
    report.max_rel_err = std::max(report.max_rel_err, rel);
  }
  return report;
}

double radon_r12_dim4(const std::function<double(double)>& f, double xi,
                      int point_count) {
  if (xi < 0.0 || xi > 1.0) {
    throw std::invalid_argument("radon_r12_dim4: xi must lie in [0, 1]");
  }
  if (point_count < 1) {
    throw std::invalid_argument("radon_r12_dim4: need at least one point");
  }
  // Chebyshev-Gauss nodes t_i = cos(phi_i) absorb the (1-t^2)^{-1/2} weight.
  double acc = 0.0;
  for (int i = 0; i < point_count; ++i) {
    double phi = (i + 0.5) * 0.5 * M_PI / point_count;
    double v = f(xi * std::cos(phi));
    if (!std::isfinite(v)) {
      throw std::runtime_error("radon_r12_dim4: profile not finite");
    }
    acc += v;
  }
  return acc / point_count;
}

}  // namespace zonal
