#include "volterra/calculus.hpp"

#include <map>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

MultiIndex unit(int i) {
  MultiIndex e{};
  e[i] = 1;
  return e;
}

int first_nonzero(const MultiIndex& a) {
  for (int i = 0; i < kMaxDim; ++i)
    if (a[i] != 0) return i;
  return -1;
}

/// Multi-indices of length `d` with |α| = n, in lexicographic order.
std::vector<MultiIndex> indices_of_order(int d, int n) {
  std::vector<MultiIndex> out;
  if (d == 1) {
    out.push_back(MultiIndex{n, 0});
  } else {
    for (int a = n; a >= 0; --a) out.push_back(MultiIndex{a, n - a});
  }
  return out;
}

double factorial(const MultiIndex& a) {
  double f = 1.0;
  for (int v : a)
    for (int k = 2; k <= v; ++k) f *= k;
  return f;
}

/// Memoized ∂^α of one symbol in ξ or x.
class DerivativeCache {
 public:
  DerivativeCache(const ParabolicSymbol& base, Variable::Kind kind) : kind_(kind) {
    cache_.emplace(MultiIndex{}, base);
  }

  const ParabolicSymbol& get(const MultiIndex& alpha) {
    if (auto it = cache_.find(alpha); it != cache_.end()) return it->second;
    const int i = first_nonzero(alpha);
    MultiIndex lower = alpha;
    --lower[i];
    const ParabolicSymbol& prev = get(lower);
    const Variable v{kind_, i};
    return cache_.emplace(alpha, symbol_deriv(prev, v)).first->second;
  }

 private:
  Variable::Kind kind_;
  std::map<MultiIndex, ParabolicSymbol> cache_;
};

complex minus_i_power(int n) {
  static const complex cycle[4] = {1.0, complex(0, -1), -1.0, complex(0, 1)};
  return cycle[n % 4];
}

}  // namespace

FormPtr reference_form(const OperatorSpec& op) { return std::make_shared<const QuadraticForm>(op.metric); }

ParabolicSymbol spatial_symbol(const OperatorSpec& op, FormPtr reference) {
  if (reference->dim() != op.dim) throw DomainError("reference form dimension mismatch");
  ParabolicSymbol s = ParabolicSymbol::quadratic(reference, op.metric);
  for (int j = 0; j < op.dim; ++j) s.add_term(op.drift[j] * complex(0.0, 1.0), unit(j), 0);
  s.add_term(op.potential, MultiIndex{}, 0);
  return s;
}

ParabolicSymbol operator_symbol(const OperatorSpec& op, FormPtr reference) {
  return ParabolicSymbol::i_tau(reference) + spatial_symbol(op, reference);
}

ParabolicSymbol operator_symbol(const OperatorSpec& op) { return operator_symbol(op, reference_form(op)); }

ParabolicSymbol sharp_product(const ParabolicSymbol& q1, const ParabolicSymbol& q2, int N) {
  if (N < 1) throw DomainError("expansion depth N must be at least 1");
  if (!same_form(q1, q2)) throw CalculusMismatch("symbols use different reference forms");
  const int d = q1.dim();
  const int min_degree = q1.order() + q2.order() - N + 1;
  DerivativeCache d1(q1, Variable::Kind::Xi);
  DerivativeCache d2(q2, Variable::Kind::X);
  ParabolicSymbol result = ParabolicSymbol::zero(q1.form(), q1.order() + q2.order());
  result.set_floor(min_degree);
  for (int n = 0; n < N; ++n) {
    for (const auto& alpha : indices_of_order(d, n)) {
      const ParabolicSymbol& a = d1.get(alpha);
      if (a.is_zero()) continue;
      const ParabolicSymbol& b = d2.get(alpha);
      if (b.is_zero()) continue;
      result += symbol_mul(a, b, min_degree) * (minus_i_power(n) / factorial(alpha));
    }
  }
  return result;
}

ParabolicSymbol sharp_product_exact(const ParabolicSymbol& q1, const ParabolicSymbol& q2) {
  if (!q1.is_polynomial()) throw DomainError("exact composition needs a left factor polynomial in ξ and τ");
  if (!same_form(q1, q2)) throw CalculusMismatch("symbols use different reference forms");
  const int d = q1.dim();
  DerivativeCache d1(q1, Variable::Kind::Xi);
  DerivativeCache d2(q2, Variable::Kind::X);
  ParabolicSymbol result = ParabolicSymbol::zero(q1.form(), q1.order() + q2.order());
  for (int n = 0;; ++n) {
    bool any = false;
    for (const auto& alpha : indices_of_order(d, n)) {
      const ParabolicSymbol& a = d1.get(alpha);
      if (a.is_zero()) continue;
      any = true;
      const ParabolicSymbol& b = d2.get(alpha);
      if (b.is_zero()) continue;
      result += symbol_mul(a, b) * (minus_i_power(n) / factorial(alpha));
    }
    if (!any) break;
  }
  return result;
}

ParabolicSymbol principal_part(const ParabolicSymbol& q) { return q.graded_piece(q.order()); }

bool has_heat_principal_part(const ParabolicSymbol& p) {
  if (p.order() != 2) return false;
  const auto top = p.piece(2);
  return top.size() == 1 && top[0].lpow == 1 && top[0].beta == MultiIndex{} &&
         top[0].coeff == TrigPolynomial::constant(p.dim(), 1.0);
}

Parametrix parametrix(const ParabolicSymbol& p, int N) {
  if (N < 0) throw DomainError("parametrix depth must be nonnegative");
  if (!has_heat_principal_part(p) || !p.is_polynomial())
    throw ShapeError("parametrix needs an order-2 differential symbol with principal part Λ");
  const FormPtr& form = p.form();
  const ParabolicSymbol inverse = ParabolicSymbol::resolvent_power(form, -1);

  Parametrix out{ParabolicSymbol::zero(form, -2), -ParabolicSymbol::one(form), N, 0.0};
  ParabolicSymbol& q = out.symbol;
  ParabolicSymbol& acc = out.defect;  // p # (q_{−2} + … ) − 1
  for (int j = 0; j <= N; ++j) {
    const ParabolicSymbol rhs = acc.graded_piece(-j);
    const ParabolicSymbol qj = (symbol_mul(inverse, rhs) * complex(-1.0)).with_order(-2 - j);
    q += qj;
    acc += sharp_product_exact(p, qj);
    // Degree −j now cancels analytically; strip what rounding left behind.
    const ParabolicSymbol left = acc.graded_piece(-j);
    if (!left.is_zero()) {
      out.cancellation_residue = std::max(out.cancellation_residue, left.max_abs_coefficient());
      acc -= left;
    }
  }
  return out;
}

}  // namespace volterra
