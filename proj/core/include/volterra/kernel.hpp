#pragma once

#include <vector>

#include "volterra/symbol.hpp"

namespace volterra {

/// coeff(x)·ξ^β·t^p·e^{−t G(x)(ξ,ξ)}·H(t); the 1/p! of the transform is folded into coeff.
struct KernelPiece {
  TrigPolynomial coeff;
  MultiIndex beta{};
  int tpow = 0;
};

/// Causal kernel given by closed-form pieces over a reference form G.
///
/// Two representations are exposed: the mixed one in (x, ξ, t), which is the
/// inverse τ-transform of the symbol, and the spatial one in (x; ζ, t),
/// obtained by also integrating out ξ against (2π)^{−d} e^{i⟨ζ,ξ⟩}.
class CausalKernel {
 public:
  explicit CausalKernel(FormPtr form);

  int dim() const { return form_->dim(); }
  const FormPtr& form() const { return form_; }
  const std::vector<KernelPiece>& pieces() const { return pieces_; }
  void add_piece(KernelPiece piece);
  bool is_zero() const { return pieces_.empty(); }

  /// Value at (x, ξ, t); zero for t < 0.
  complex mixed(const Point& x, std::span<const double> xi, double t) const;
  /// Value at (x; ζ, t); zero for t <= 0.
  complex spatial(const Point& x, std::span<const double> zeta, double t) const;
  /// k(x; 0, t).
  complex diagonal(const Point& x, double t) const;

  /// The symbol whose inverse τ-transform this kernel is.
  ParabolicSymbol to_symbol() const;

 private:
  FormPtr form_;
  std::vector<KernelPiece> pieces_;
};

/// Closed-form inverse τ-transform of c ξ^β Λ^l, l <= −1:
/// c ξ^β t^{−l−1}/(−l−1)! e^{−tG(ξ,ξ)} H(t).
CausalKernel causal_kernel(const FormPtr& form, const SymbolTerm& term);
/// Sum of the kernels of every term of `q`.
CausalKernel causal_kernel(const ParabolicSymbol& q);

/// Smallest j >= 0 with m + 2j > −(d+2).
int min_extension_index(int m, int d);

/// Samples of a smooth causal remainder kernel on a (ζ, t) grid at a fixed base point.
struct ResidualKernel {
  Point x{};
  std::vector<double> zeta;  // per-axis nodes, symmetric about 0
  std::vector<double> t;     // includes negative times
  /// Row-major: t slowest, then ζ_0, then ζ_1.
  std::vector<complex> values;
  /// No nonzero sample at t < 0.
  bool causal_support = false;
  /// sup over the outermost ζ shell divided by the global sup.
  double decay_ratio = 0.0;
};

/// Samples the kernel of `q` (every term with Λ power <= −1) on
/// ζ ∈ [−zeta_max, zeta_max]^d × t ∈ [−t_max, t_max].
ResidualKernel residual_kernel(const ParabolicSymbol& q, const Point& x, int zeta_nodes, double zeta_max,
                               int t_nodes, double t_max);

}  // namespace volterra
