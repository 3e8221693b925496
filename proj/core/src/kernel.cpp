#include "volterra/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "volterra/errors.hpp"
#include "volterra/gaussian.hpp"

namespace volterra {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double monomial(std::span<const double> xi, const MultiIndex& beta, int d) {
  double v = 1.0;
  for (int i = 0; i < d; ++i) v *= std::pow(xi[i], beta[i]);
  return v;
}

double t_power(double t, int p) { return p == 0 ? 1.0 : std::pow(t, p); }

}  // namespace

CausalKernel::CausalKernel(FormPtr form) : form_(std::move(form)) {
  if (!form_) throw DomainError("kernel needs a reference quadratic form");
}

void CausalKernel::add_piece(KernelPiece piece) {
  if (piece.tpow < 0) throw DomainError("kernel time power must be nonnegative");
  if (piece.coeff.is_zero()) return;
  pieces_.push_back(std::move(piece));
}

complex CausalKernel::mixed(const Point& x, std::span<const double> xi, double t) const {
  if (t < 0.0) return 0.0;
  const double gauss = std::exp(-t * (*form_)(x, xi).real());
  complex sum{};
  for (const auto& p : pieces_) sum += p.coeff(x) * monomial(xi, p.beta, dim()) * t_power(t, p.tpow);
  return sum * gauss;
}

complex CausalKernel::spatial(const Point& x, std::span<const double> zeta, double t) const {
  if (t <= 0.0) return 0.0;
  const int d = dim();
  const Eigen::MatrixXd B = t * form_->matrix_at(x);
  complex sum{};
  for (const auto& p : pieces_)
    sum += p.coeff(x) * t_power(t, p.tpow) * shifted_gaussian_moment(p.beta, B, zeta);
  return sum * std::pow(2.0 * M_PI, -d);
}

complex CausalKernel::diagonal(const Point& x, double t) const {
  const std::array<double, kMaxDim> origin{};
  return spatial(x, origin, t);
}

ParabolicSymbol CausalKernel::to_symbol() const {
  int order = std::numeric_limits<int>::min();
  for (const auto& p : pieces_) {
    int deg = -2 * (p.tpow + 1);
    for (int b : p.beta) deg += b;
    order = std::max(order, deg);
  }
  ParabolicSymbol q(form_, pieces_.empty() ? -2 : order);
  for (const auto& p : pieces_) q.add_term(p.coeff * complex(factorial(p.tpow)), p.beta, -p.tpow - 1);
  return q;
}

CausalKernel causal_kernel(const FormPtr& form, const SymbolTerm& term) {
  if (term.lpow >= 0)
    throw DomainError("Λ power " + std::to_string(term.lpow) +
                      " is not integrable in τ; only negative powers have a causal extension");
  CausalKernel k(form);
  const int p = -term.lpow - 1;
  k.add_piece(KernelPiece{term.coeff * complex(1.0 / factorial(p)), term.beta, p});
  return k;
}

CausalKernel causal_kernel(const ParabolicSymbol& q) {
  CausalKernel k(q.form());
  for (const auto& [key, c] : q.terms()) {
    const CausalKernel piece = causal_kernel(q.form(), SymbolTerm{c, key.beta, key.lpow});
    for (const auto& p : piece.pieces()) k.add_piece(p);
  }
  return k;
}

int min_extension_index(int m, int d) {
  if (d < 1) throw DomainError("dimension must be positive");
  int j = 0;
  while (m + 2 * j <= -(d + 2)) ++j;
  return j;
}

ResidualKernel residual_kernel(const ParabolicSymbol& q, const Point& x, int zeta_nodes, double zeta_max,
                               int t_nodes, double t_max) {
  if (zeta_nodes < 3 || t_nodes < 3 || !(zeta_max > 0.0) || !(t_max > 0.0))
    throw DomainError("residual kernel grid is degenerate");
  const int d = q.dim();
  const CausalKernel k = causal_kernel(q);
  ResidualKernel r;
  r.x = x;
  for (int i = 0; i < zeta_nodes; ++i) r.zeta.push_back(-zeta_max + 2.0 * zeta_max * i / (zeta_nodes - 1));
  for (int i = 0; i < t_nodes; ++i) r.t.push_back(-t_max + 2.0 * t_max * i / (t_nodes - 1));

  double global = 0.0;
  double shell = 0.0;
  double before = 0.0;
  const int inner = d == 1 ? 1 : zeta_nodes;
  for (double t : r.t) {
    for (int a = 0; a < zeta_nodes; ++a) {
      for (int b = 0; b < inner; ++b) {
        const std::array<double, kMaxDim> z{r.zeta[a], d == 1 ? 0.0 : r.zeta[b]};
        const complex v = k.spatial(x, z, t);
        r.values.push_back(v);
        const double m = std::abs(v);
        global = std::max(global, m);
        if (t < 0.0) before = std::max(before, m);
        const bool outer = a == 0 || a == zeta_nodes - 1 || (d == 2 && (b == 0 || b == zeta_nodes - 1));
        if (outer) shell = std::max(shell, m);
      }
    }
  }
  r.causal_support = before == 0.0;
  r.decay_ratio = global == 0.0 ? 0.0 : shell / global;
  return r;
}

}  // namespace volterra
