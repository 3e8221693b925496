#pragma once

#include <functional>
#include <string>
#include <vector>

#include "volterra/kernel.hpp"
#include "volterra/symbol.hpp"

namespace volterra {

/// Uniform τ grid and regularizer (1 + iετ)^{−power}.
struct CausalityGrid {
  int nodes = 4096;
  double half_width = 200.0;
  double eps = 0.1;
  int power = 4;

  /// Defaults with the power raised to d+3 where needed.
  static CausalityGrid defaults(int dim);
  /// Parses "nodes:half_width:eps:power".
  static CausalityGrid parse(const std::string& text);
  void validate(int dim) const;
  /// Spacing of the reconstructed time axis, π / half_width.
  double time_step() const;
};

/// Base point and frequency at which a symbol is probed.
struct CausalitySample {
  Point x{};
  std::array<double, kMaxDim> xi{};
};

/// Probe points away from ξ = 0, where Λ has a pole on the real τ axis.
std::vector<CausalitySample> default_causality_samples(int dim);

/// max_{t < −2Δt}|k(t)| / max_t|k(t)| for the discrete inverse τ-transform of
/// τ ↦ f(τ)(1 + iετ)^{−power}; 0 when k vanishes.
double causality_ratio(const std::function<complex(double)>& f, const CausalityGrid& grid);

/// Worst ratio of `q` over the probe points.
double causality_check(const ParabolicSymbol& q, const CausalityGrid& grid,
                       const std::vector<CausalitySample>& samples);
double causality_check(const ParabolicSymbol& q, const CausalityGrid& grid);
/// Checks the kernel through the symbol it transforms.
double causality_check(const CausalKernel& k, const CausalityGrid& grid);

/// Regularized, sampled inverse τ-transform: returns (t_m, k(t_m)) for m in [−n/2, n/2).
std::vector<std::pair<double, complex>> regularized_kernel_samples(const std::function<complex(double)>& f,
                                                                   const CausalityGrid& grid);

}  // namespace volterra
