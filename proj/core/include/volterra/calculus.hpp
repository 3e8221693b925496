#pragma once

#include "volterra/operator_spec.hpp"
#include "volterra/symbol.hpp"

namespace volterra {

/// Reference form shared by every symbol derived from `op`.
FormPtr reference_form(const OperatorSpec& op);

/// Full symbol iτ + G(x)(ξ,ξ) + i b(x)·ξ + V(x) of ∂_t + A.
ParabolicSymbol operator_symbol(const OperatorSpec& op);
/// Same symbol written over an externally supplied reference form.
ParabolicSymbol operator_symbol(const OperatorSpec& op, FormPtr reference);
/// Symbol of A alone, G(x)(ξ,ξ) + i b(x)·ξ + V(x), as a ξ-polynomial.
ParabolicSymbol spatial_symbol(const OperatorSpec& op, FormPtr reference);

/// Σ_{|α|<N} (1/α!) (∂_ξ^α q1)(D_x^α q2), D_x = −i∂_x, keeping degrees >= m1+m2−N+1.
ParabolicSymbol sharp_product(const ParabolicSymbol& q1, const ParabolicSymbol& q2, int N);

/// The full, untruncated expansion for a left factor polynomial in ξ and τ.
/// The series terminates once ∂_ξ^α q1 vanishes, so the result is exact.
ParabolicSymbol sharp_product_exact(const ParabolicSymbol& q1, const ParabolicSymbol& q2);

/// Degree-m piece, the representative of the principal class.
ParabolicSymbol principal_part(const ParabolicSymbol& q);

struct Parametrix {
  /// q_{−2} + q_{−3} + … + q_{−2−N}.
  ParabolicSymbol symbol;
  /// p # q − 1, exact; every component lies in degree <= −N−1.
  ParabolicSymbol defect;
  int depth = 0;
  /// Largest rounding residue removed from a degree that vanishes identically.
  double cancellation_residue = 0.0;
};

/// Recursive parametrix of a symbol with principal part Λ.
///
/// Depth N produces the N+1 pieces q_{−2−j}, 0 <= j <= N, so that the
/// defect starts at degree −N−1.
Parametrix parametrix(const ParabolicSymbol& p, int N);

/// True when `p` has order 2 and its degree-2 piece is exactly Λ.
bool has_heat_principal_part(const ParabolicSymbol& p);

}  // namespace volterra
