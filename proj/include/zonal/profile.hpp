#ifndef ZONAL_PROFILE_HPP
#define ZONAL_PROFILE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonal/legendre.hpp"

// Zonal functions on S^{n-1} stored as coefficients in the dimension-n
// Legendre basis, and the diagonal (multiplier) operators acting on them.

namespace zonal {

enum class Parity { Even, General };

struct ZonalProfile {
  int dimension = 0;
  std::vector<double> coeffs;  // c_k, so f(t) = sum c_k P_k^n(t)
  Parity parity = Parity::General;

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Synthesize sum c_k P_k^n(t).
  double operator()(double t) const;

  /// c_k = 0 for odd k within tol.
  bool is_even(double tol = 1e-12) const;
};

ZonalProfile make_profile(int dimension, std::vector<double> coeffs);

/// Coefficients c_k = N(n,k) <f, P_k>_w / <1,1>_w of the band-limited
/// expansion f ~ sum c_k P_k^n, truncated at the basis degree.
ZonalProfile expand(const LegendreBasis& basis,
                    const std::function<double(double)>& f);
ZonalProfile expand(const LegendreBasis& basis, std::span<const double> samples);

struct SingularOperatorError : std::runtime_error {
  SingularOperatorError(const std::string& name, int k, double value);
  int degree;
  double multiplier;
};

enum class ParityDomain { EvenOnly, AllDegrees };

/// A named multiplier sequence acting diagonally: c_k -> a_k c_k.
struct MultiplierOperator {
  std::string name;
  int dimension = 0;
  std::vector<double> multipliers;  // a_k, k = 0..K
  ParityDomain domain = ParityDomain::AllDegrees;

  int max_degree() const { return static_cast<int>(multipliers.size()) - 1; }
};

MultiplierOperator identity_operator(int dimension, int max_degree);

/// Coefficientwise product; requires matching dimension and parity domain.
ZonalProfile apply(const MultiplierOperator& op, const ZonalProfile& f);

/// Entrywise product of multiplier sequences (operator composition).
MultiplierOperator compose(const MultiplierOperator& a,
                           const MultiplierOperator& b);

/// Multipliers 1/a_k; throws SingularOperatorError naming the first degree in
/// the parity domain with |a_k| <= tol.
MultiplierOperator invert(const MultiplierOperator& op, double tol = 1e-14);

}  // namespace zonal

#endif
