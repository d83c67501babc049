#include "zonal/profile.hpp"

#include <cmath>
#include <utility>

namespace zonal {

double ZonalProfile::operator()(double t) const {
  if (coeffs.empty()) return 0.0;
  std::vector<double> row = legendre_row(dimension, max_degree(), t);
  double acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * row[k];
  return acc;
}

bool ZonalProfile::is_even(double tol) const {
  for (std::size_t k = 1; k < coeffs.size(); k += 2) {
    if (std::fabs(coeffs[k]) > tol) return false;
  }
  return true;
}

ZonalProfile make_profile(int dimension, std::vector<double> coeffs) {
  if (dimension < 3) {
    throw std::invalid_argument("make_profile: dimension must be >= 3");
  }
  if (coeffs.empty()) {
    throw std::invalid_argument("make_profile: need at least the constant term");
  }
  ZonalProfile p;
  p.dimension = dimension;
  p.coeffs = std::move(coeffs);
  p.parity = p.is_even() ? Parity::Even : Parity::General;
  return p;
}

ZonalProfile expand(const LegendreBasis& basis,
                    const std::function<double(double)>& f) {
  std::vector<double> samples(basis.node_count());
  for (int i = 0; i < basis.node_count(); ++i) samples[i] = f(basis.nodes()[i]);
  return expand(basis, samples);
}

ZonalProfile expand(const LegendreBasis& basis, std::span<const double> samples) {
  ZonalProfile p;
  p.dimension = basis.dimension();
  p.coeffs.resize(basis.max_degree() + 1);
  for (int k = 0; k <= basis.max_degree(); ++k) {
    double a = basis.multiplier(samples, k);
    p.coeffs[k] = static_cast<double>(harmonic_dim(basis.dimension(), k)) * a;
  }
  p.parity = p.is_even() ? Parity::Even : Parity::General;
  return p;
}

SingularOperatorError::SingularOperatorError(const std::string& name, int k,
                                             double value)
    : std::runtime_error("operator '" + name + "' is singular at degree " +
                         std::to_string(k) + " (multiplier " +
                         std::to_string(value) + ")"),
      degree(k),
      multiplier(value) {}

MultiplierOperator identity_operator(int dimension, int max_degree) {
  MultiplierOperator op;
  op.name = "identity";
  op.dimension = dimension;
  op.multipliers.assign(max_degree + 1, 1.0);
  return op;
}

ZonalProfile apply(const MultiplierOperator& op, const ZonalProfile& f) {
  if (op.dimension != f.dimension) {
    throw std::invalid_argument("apply: operator dimension " +
                                std::to_string(op.dimension) +
                                " does not match profile dimension " +
                                std::to_string(f.dimension));
  }
  if (op.domain == ParityDomain::EvenOnly && !f.is_even()) {
    throw std::invalid_argument("apply: operator '" + op.name +
                                "' acts on even profiles only");
  }
  if (f.max_degree() > op.max_degree()) {
    throw std::invalid_argument("apply: operator '" + op.name +
                                "' truncated below profile degree");
  }
  ZonalProfile out = f;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    out.coeffs[k] *= op.multipliers[k];
  }
  return out;
}

MultiplierOperator compose(const MultiplierOperator& a,
                           const MultiplierOperator& b) {
  if (a.dimension != b.dimension) {
    throw std::invalid_argument("compose: operator dimensions differ");
  }
  MultiplierOperator out;
  out.name = a.name + "*" + b.name;
  out.dimension = a.dimension;
  out.domain = (a.domain == ParityDomain::EvenOnly ||
                b.domain == ParityDomain::EvenOnly)
                   ? ParityDomain::EvenOnly
                   : ParityDomain::AllDegrees;
  int k_max = std::min(a.max_degree(), b.max_degree());
  out.multipliers.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    out.multipliers[k] = a.multipliers[k] * b.multipliers[k];
  }
  return out;
}

MultiplierOperator invert(const MultiplierOperator& op, double tol) {
  MultiplierOperator out = op;
  out.name = "inv(" + op.name + ")";
  for (int k = 0; k <= op.max_degree(); ++k) {
    if (op.domain == ParityDomain::EvenOnly && k % 2 == 1) {
      out.multipliers[k] = 0.0;
      continue;
    }
    if (std::fabs(op.multipliers[k]) <= tol) {
      throw SingularOperatorError(op.name, k, op.multipliers[k]);
    }
    out.multipliers[k] = 1.0 / op.multipliers[k];
  }
  return out;
}

}  // namespace zonal
