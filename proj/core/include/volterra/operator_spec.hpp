#pragma once

#include <string>

#include "volterra/quadratic_form.hpp"
#include "volterra/trig_polynomial.hpp"

namespace volterra {

/// A = −g^{ij}(x)∂_i∂_j + b^j(x)∂_j + V(x) on T^d with real trigonometric coefficients.
struct OperatorSpec {
  std::string name;
  int dim = 1;
  QuadraticForm metric;
  std::array<TrigPolynomial, kMaxDim> drift{};
  TrigPolynomial potential;

  OperatorSpec() = default;
  explicit OperatorSpec(int dim, std::string name = {});

  /// −Δ on T^d.
  static OperatorSpec laplacian(int dim);
  /// −Σ ∂_i(g^{ij}∂_j) + V, i.e. drift b^j = −Σ_i ∂_i g^{ij}.
  static OperatorSpec divergence_form(int dim, const QuadraticForm& metric, const TrigPolynomial& potential,
                                      std::string name = {});

  /// Throws DomainError on complex coefficients or a metric that fails the positivity check.
  void validate() const;
  bool has_constant_coefficients() const;
  int max_frequency() const;
};

}  // namespace volterra
