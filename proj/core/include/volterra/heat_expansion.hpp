#pragma once

#include <vector>

#include "volterra/calculus.hpp"
#include "volterra/operator_spec.hpp"

namespace volterra {

struct HeatCoefficient {
  int j = 0;
  /// (j − d)/2.
  double exponent = 0.0;
  TrigPolynomial q;
};

/// k_t(x,x) ~ Σ_j t^{(j−d)/2} q_j(x) as t → 0+.
struct HeatExpansion {
  int dim = 1;
  int order = 2;
  std::vector<HeatCoefficient> terms;
  /// Coefficient of t^{(J−d)/2} log t; the construction never produces one.
  TrigPolynomial log_coefficient;

  const TrigPolynomial& q(int j) const;
  /// Σ_j t^{(j−d)/2} q_j(x).
  double evaluate(const Point& x, double t) const;
};

/// Grid size per axis used when a coefficient is not an exact trig polynomial.
inline constexpr int kHeatSampleGrid = 128;

/// Diagonal coefficient of one graded piece of degree −2−j at (ζ, t) = (0, 1).
///
/// Exact when the reference form is constant; otherwise the value is sampled on
/// a kHeatSampleGrid^d grid and projected back onto Fourier modes.
TrigPolynomial diagonal_coefficient(const ParabolicSymbol& piece);

HeatExpansion heat_coefficients(const OperatorSpec& op, int J);

}  // namespace volterra
