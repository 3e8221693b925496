#pragma once

#include <map>
#include <random>

#include <Eigen/Dense>

#include <volterra/volterra.hpp>

namespace volterra::app {

/// Σ_γ a_γ(x) ∂^γ with trigonometric coefficients, composed by the Leibniz rule.
///
/// Kept independent of the symbol calculus so it can serve as a reference for
/// the #-product.
class DiffOperator {
 public:
  explicit DiffOperator(int dim) : dim_(dim) {}

  static DiffOperator from_spec(const OperatorSpec& op);

  int dim() const { return dim_; }
  const std::map<MultiIndex, TrigPolynomial>& coefficients() const { return coeffs_; }
  void add(const MultiIndex& gamma, const TrigPolynomial& a);

  /// (A∘B) u = Σ_{γ,δ} a_γ Σ_{μ<=γ} C(γ,μ) (∂^μ b_δ) ∂^{γ−μ+δ} u.
  friend DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
  DiffOperator operator+(const DiffOperator& other) const;

  /// Σ_γ a_γ (iξ)^γ over the reference form.
  ParabolicSymbol symbol(const FormPtr& form) const;

  /// (A e^{i⟨ξ,·⟩})(x) e^{−i⟨ξ,x⟩}, evaluated directly from the coefficients.
  complex apply_to_plane_wave(const Point& x, std::span<const double> xi) const;

 private:
  int dim_;
  std::map<MultiIndex, TrigPolynomial> coeffs_;
};

/// Symbol of (∂_t + A1)(∂_t + A2) = ∂_t² + (A1 + A2)∂_t + A1A2 over `form`.
ParabolicSymbol heat_composition_symbol(const OperatorSpec& a1, const OperatorSpec& a2, const FormPtr& form);

/// Real trigonometric polynomial with frequencies |k_i| <= max_freq and amplitudes <= amp.
TrigPolynomial random_real_trig(std::mt19937_64& rng, int dim, int max_freq, double amp);

/// Operator with a metric that stays positive definite and random drift/potential.
OperatorSpec random_operator(std::mt19937_64& rng, int dim, int max_freq);

/// B Bᴴ for a complex Gaussian B, scaled to spectrum within [0, scale].
Eigen::MatrixXcd random_hermitian_psd(std::mt19937_64& rng, int n, double scale);

}  // namespace volterra::app
