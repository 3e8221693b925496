#include "volterra_app/oracles.hpp"

#include <cmath>

namespace volterra::app {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TrigPolynomial partial(const TrigPolynomial& p, const MultiIndex& mu, int dim) {
  TrigPolynomial r = p;
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < mu[i]; ++k) r = r.derivative(i);
  return r;
}

}  // namespace

DiffOperator DiffOperator::from_spec(const OperatorSpec& op) {
  DiffOperator A(op.dim);
  for (int i = 0; i < op.dim; ++i) {
    for (int j = 0; j < op.dim; ++j) {
      MultiIndex g{};
      ++g[i];
      ++g[j];
      A.add(g, -op.metric.entry(i, j));
    }
    MultiIndex e{};
    e[i] = 1;
    A.add(e, op.drift[i]);
  }
  A.add(MultiIndex{}, op.potential);
  return A;
}

void DiffOperator::add(const MultiIndex& gamma, const TrigPolynomial& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(gamma, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  const int d = a.dim_;
  DiffOperator out(d);
  for (const auto& [gamma, ag] : a.coeffs_) {
    for (const auto& [delta, bd] : b.coeffs_) {
      for (int m0 = 0; m0 <= gamma[0]; ++m0) {
        for (int m1 = 0; m1 <= (d > 1 ? gamma[1] : 0); ++m1) {
          const MultiIndex mu{m0, m1};
          const double c = binomial(gamma[0], m0) * binomial(gamma[1], m1);
          const MultiIndex order{gamma[0] - m0 + delta[0], gamma[1] - m1 + delta[1]};
          out.add(order, ag * partial(bd, mu, d) * complex(c));
        }
      }
    }
  }
  return out;
}

DiffOperator DiffOperator::operator+(const DiffOperator& other) const {
  DiffOperator out = *this;
  for (const auto& [g, c] : other.coeffs_) out.add(g, c);
  return out;
}

ParabolicSymbol DiffOperator::symbol(const FormPtr& form) const {
  int order = 0;
  for (const auto& [g, c] : coeffs_) order = std::max(order, g[0] + g[1]);
  ParabolicSymbol s = ParabolicSymbol::zero(form, order);
  for (const auto& [g, c] : coeffs_) {
    complex ipow = 1.0;
    for (int k = 0; k < g[0] + g[1]; ++k) ipow *= complex(0.0, 1.0);
    s.add_term(c * ipow, g, 0);
  }
  return s;
}

complex DiffOperator::apply_to_plane_wave(const Point& x, std::span<const double> xi) const {
  // ∂^γ e^{i⟨ξ,x⟩} = (iξ)^γ e^{i⟨ξ,x⟩}.
  complex sum{};
  for (const auto& [g, c] : coeffs_) {
    complex m = c(x);
    for (int i = 0; i < dim_; ++i) m *= std::pow(complex(0.0, xi[i]), g[i]);
    sum += m;
  }
  return sum;
}

ParabolicSymbol heat_composition_symbol(const OperatorSpec& a1, const OperatorSpec& a2, const FormPtr& form) {
  const DiffOperator A1 = DiffOperator::from_spec(a1);
  const DiffOperator A2 = DiffOperator::from_spec(a2);
  const ParabolicSymbol itau = ParabolicSymbol::i_tau(form);
  ParabolicSymbol s = symbol_mul(itau, itau);
  s += symbol_mul(itau, (A1 + A2).symbol(form));
  s += compose(A1, A2).symbol(form);
  return s;
}

TrigPolynomial random_real_trig(std::mt19937_64& rng, int dim, int max_freq, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  TrigPolynomial p(dim);
  const int k1max = dim > 1 ? max_freq : 0;
  for (int k0 = 0; k0 <= max_freq; ++k0) {
    for (int k1 = -k1max; k1 <= k1max; ++k1) {
      if (k0 == 0 && k1 < 0) continue;
      const MultiIndex k{k0, k1};
      if (k == MultiIndex{}) {
        p.add(k, u(rng));
        continue;
      }
      const complex c(u(rng), u(rng));
      p.add(k, 0.5 * c);
      p.add(MultiIndex{-k0, -k1}, 0.5 * std::conj(c));
    }
  }
  return p;
}

OperatorSpec random_operator(std::mt19937_64& rng, int dim, int max_freq) {
  OperatorSpec op(dim, "random");
  const int terms = dim == 1 ? 2 * max_freq + 1 : (2 * max_freq + 1) * (2 * max_freq + 1);
  // Each entry moves by less than 0.3 in sup norm, so G stays >= 0.4 Id.
  const double amp = 0.2 / terms;
  for (int i = 0; i < dim; ++i) {
    op.metric.set_entry(i, i, TrigPolynomial::constant(dim, 1.0) + random_real_trig(rng, dim, max_freq, amp));
    for (int j = i + 1; j < dim; ++j) op.metric.set_entry(i, j, random_real_trig(rng, dim, max_freq, amp));
    op.drift[i] = random_real_trig(rng, dim, max_freq, 1.0);
  }
  op.potential = random_real_trig(rng, dim, max_freq, 1.0);
  op.validate();
  return op;
}

Eigen::MatrixXcd random_hermitian_psd(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = complex(g(rng), g(rng));
  Eigen::MatrixXcd m = b * b.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  m *= scale / es.eigenvalues().maxCoeff();
  return 0.5 * (m + m.adjoint());
}

}  // namespace volterra::app
