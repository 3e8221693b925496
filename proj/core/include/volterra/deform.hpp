#pragma once

#include <functional>
#include <vector>

#include "volterra/kernel.hpp"
#include "volterra/symbol.hpp"

namespace volterra {

/// Weighted filtration of A ⊕ R: ξ directions weight 1, the time direction weight 2.
struct Filtration {
  int dim = 1;
  std::array<int, 2> weights{1, 2};

  /// dim H^1 = d, dim H^2 = d + 1.
  std::array<int, 2> subspace_dims() const { return {dim, dim + 1}; }
  /// Σ w_k (dim H^k − dim H^{k−1}) = d + 2.
  int homogeneous_dimension() const;
};

/// q(x, ħξ, ħ²τ) for ħ ∈ (0, 1]; the principal piece at ħ = 0.
ParabolicSymbol rescale_symbol(const ParabolicSymbol& q, double hbar);

/// ħ^m q(x, ξ/ħ, τ/ħ²) = Σ_s ħ^{m−s} q_s, which tends to the principal piece linearly in ħ.
ParabolicSymbol model_approximant(const ParabolicSymbol& q, double hbar);

/// (ζ, t) ↦ ħ^{−d−2} k(x, ħζ, ħ²t), computed piecewise in closed form.
CausalKernel rescale_kernel(const CausalKernel& k, double hbar);

/// The ħ-indexed family generated by a symbol of order m.
class ScaledFamily {
 public:
  explicit ScaledFamily(ParabolicSymbol base);

  int order() const { return base_.order(); }
  int dim() const { return base_.dim(); }
  const ParabolicSymbol& base() const { return base_; }

  ParabolicSymbol symbol(double hbar) const { return rescale_symbol(base_, hbar); }
  /// Rescaled kernel for ħ ∈ (0, 1].
  CausalKernel kernel(double hbar) const;
  /// Kernel of the principal piece, the ħ = 0 member.
  CausalKernel model_kernel() const;

 private:
  ParabolicSymbol base_;
};

/// Point (x; ζ, t) at which kernels are compared.
struct KernelSample {
  Point x{};
  std::array<double, kMaxDim> zeta{};
  double t = 1.0;
};

struct HomogeneityDefect {
  std::vector<complex> field;
  double sup = 0.0;
};

/// λ^{−m−d−2} k(x; ζ/λ, t/λ²) − k_model(x; ζ, t) on the samples, with k the ħ = 1 kernel.
///
/// The first term is the α_λ pushforward with its λ^{d+2} density factor,
/// normalized by the order; it equals k_model for every strictly homogeneous
/// family and approaches it like λ^{−1} when the next piece has degree m − 1.
HomogeneityDefect homogeneity_defect(const ScaledFamily& family, double lambda,
                                     const std::vector<KernelSample>& samples);

/// Default comparison grid: t ∈ {0.25, 0.5, 1, 2}, ζ on a small lattice, two base points.
std::vector<KernelSample> default_kernel_samples(int dim);

/// Jacobian determinant of (ζ, t) ↦ (λζ, λ²t) on R^d × R.
double measure_scaling_check(double lambda, int dim);

/// χ_ε(ζ, t) = ε^{−(d+2)} χ(ζ/ε, t/ε²).
using Cutoff = std::function<double(std::span<const double>, double)>;
Cutoff rescale_cutoff(Cutoff chi, double eps, int dim);

}  // namespace volterra
