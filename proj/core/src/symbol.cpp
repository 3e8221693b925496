#include "volterra/symbol.hpp"

#include <algorithm>
#include <cmath>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

int abs_index(const MultiIndex& b) {
  int s = 0;
  for (int v : b) s += v;
  return s;
}

complex ipow(complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

MultiIndex plus_unit(MultiIndex b, int i) {
  ++b[i];
  return b;
}

// A sum is only faithful down to the coarser of the two floors.
std::optional<int> upper_floor(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

int term_degree(const SymbolTerm& term) { return abs_index(term.beta) + 2 * term.lpow; }

double anisotropic_norm(std::span<const double> xi, complex tau) {
  double s = std::abs(tau);
  for (double v : xi) s += v * v;
  return std::sqrt(s);
}

int ParabolicSymbol::Key::degree() const { return abs_index(beta) + 2 * lpow; }

std::strong_ordering operator<=>(const ParabolicSymbol::Key& a, const ParabolicSymbol::Key& b) {
  if (auto c = b.degree() <=> a.degree(); c != 0) return c;
  if (auto c = a.lpow <=> b.lpow; c != 0) return c;
  return a.beta <=> b.beta;
}

ParabolicSymbol::ParabolicSymbol(FormPtr form, int order) : form_(std::move(form)), order_(order) {
  if (!form_) throw DomainError("symbol needs a reference quadratic form");
}

ParabolicSymbol ParabolicSymbol::zero(FormPtr form, int order) {
  return ParabolicSymbol(std::move(form), order);
}

ParabolicSymbol ParabolicSymbol::constant(FormPtr form, complex c) {
  ParabolicSymbol s(std::move(form), 0);
  s.add_term(TrigPolynomial::constant(s.dim(), c), MultiIndex{}, 0);
  return s;
}

ParabolicSymbol ParabolicSymbol::resolvent_power(FormPtr form, int l) {
  ParabolicSymbol s(std::move(form), 2 * l);
  s.add_term(TrigPolynomial::constant(s.dim(), 1.0), MultiIndex{}, l);
  return s;
}

ParabolicSymbol ParabolicSymbol::quadratic(FormPtr form, const QuadraticForm& h) {
  ParabolicSymbol s(std::move(form), 2);
  if (h.dim() != s.dim()) throw DomainError("quadratic form dimension mismatch");
  for (int i = 0; i < s.dim(); ++i) {
    s.add_term(h.entry(i, i), plus_unit(plus_unit(MultiIndex{}, i), i), 0);
    for (int j = i + 1; j < s.dim(); ++j)
      s.add_term(2.0 * h.entry(i, j), plus_unit(plus_unit(MultiIndex{}, i), j), 0);
  }
  return s;
}

ParabolicSymbol ParabolicSymbol::i_tau(FormPtr form) {
  auto s = resolvent_power(form, 1);
  s -= quadratic(form, *form);
  return s;
}

ParabolicSymbol ParabolicSymbol::from_term(FormPtr form, const SymbolTerm& term) {
  ParabolicSymbol s(std::move(form), term_degree(term));
  s.add_term(term);
  return s;
}

void ParabolicSymbol::add_term(const SymbolTerm& term) { add_term(term.coeff, term.beta, term.lpow); }

void ParabolicSymbol::add_term(const TrigPolynomial& coeff, const MultiIndex& beta, int lpow) {
  if (coeff.is_zero()) return;
  if (coeff.dim() != dim()) throw DomainError("coefficient dimension does not match symbol");
  for (int i = 0; i < kMaxDim; ++i) {
    if (beta[i] < 0) throw DomainError("negative ξ exponent");
    if (i >= dim() && beta[i] != 0) throw DomainError("ξ exponent beyond the torus dimension");
  }
  const Key key{beta, lpow};
  if (key.degree() > order_)
    throw ShapeError("term of degree " + std::to_string(key.degree()) + " exceeds symbol order " +
                     std::to_string(order_));
  if (floor_ && key.degree() < *floor_) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<int> ParabolicSymbol::degrees() const {
  std::vector<int> out;
  for (const auto& [k, c] : terms_)
    if (out.empty() || out.back() != k.degree()) out.push_back(k.degree());
  return out;
}

std::optional<int> ParabolicSymbol::leading_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

std::vector<SymbolTerm> ParabolicSymbol::piece(int degree) const {
  std::vector<SymbolTerm> out;
  for (const auto& [k, c] : terms_)
    if (k.degree() == degree) out.push_back(SymbolTerm{c, k.beta, k.lpow});
  return out;
}

ParabolicSymbol ParabolicSymbol::graded_piece(int degree) const {
  ParabolicSymbol s(form_, degree);
  for (const auto& [k, c] : terms_)
    if (k.degree() == degree) s.terms_.emplace(k, c);
  return s;
}

ParabolicSymbol ParabolicSymbol::truncated(int min_degree) const {
  ParabolicSymbol s(form_, order_);
  for (const auto& [k, c] : terms_)
    if (k.degree() >= min_degree) s.terms_.emplace(k, c);
  s.floor_ = floor_ ? std::max(*floor_, min_degree) : min_degree;
  return s;
}

ParabolicSymbol ParabolicSymbol::with_order(int order) const {
  if (auto lead = leading_degree(); lead && *lead > order)
    throw ShapeError("declared order is below the leading degree");
  ParabolicSymbol s = *this;
  s.order_ = order;
  return s;
}

bool ParabolicSymbol::all_negative_powers() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.lpow <= -1; });
}

bool ParabolicSymbol::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.lpow >= 0; });
}

double ParabolicSymbol::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

complex ParabolicSymbol::operator()(const Point& x, std::span<const double> xi, complex tau) const {
  return symbol_eval(*this, x, xi, tau);
}

void ParabolicSymbol::require_same_form(const ParabolicSymbol& other) const {
  if (!same_form(*this, other)) throw CalculusMismatch("symbols use different reference forms");
}

ParabolicSymbol& ParabolicSymbol::operator+=(const ParabolicSymbol& other) {
  require_same_form(other);
  order_ = std::max(order_, other.order_);
  floor_ = upper_floor(floor_, other.floor_);
  for (const auto& [k, c] : other.terms_) {
    if (floor_ && k.degree() < *floor_) continue;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (floor_) std::erase_if(terms_, [this](const auto& kv) { return kv.first.degree() < *floor_; });
  return *this;
}

ParabolicSymbol& ParabolicSymbol::operator-=(const ParabolicSymbol& other) { return *this += -other; }

ParabolicSymbol& ParabolicSymbol::operator*=(complex s) {
  if (s == complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ParabolicSymbol ParabolicSymbol::operator-() const {
  ParabolicSymbol r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

ParabolicSymbol operator*(const ParabolicSymbol& a, const ParabolicSymbol& b) { return symbol_mul(a, b); }

bool operator==(const ParabolicSymbol& a, const ParabolicSymbol& b) {
  return same_form(a, b) && a.order_ == b.order_ && a.floor_ == b.floor_ && a.terms_ == b.terms_;
}

bool same_form(const ParabolicSymbol& a, const ParabolicSymbol& b) {
  return a.form() == b.form() || *a.form() == *b.form();
}

ParabolicSymbol dilate(const ParabolicSymbol& q, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("dilation factor must be positive");
  ParabolicSymbol r = ParabolicSymbol::zero(q.form(), q.order());
  r.set_floor(q.floor());
  for (const auto& [k, c] : q.terms()) r.add_term(c * complex(ipow(lambda, k.degree())), k.beta, k.lpow);
  return r;
}

ParabolicSymbol symbol_mul(const ParabolicSymbol& a, const ParabolicSymbol& b, std::optional<int> min_degree) {
  if (!same_form(a, b)) throw CalculusMismatch("symbols use different reference forms");
  // Anything below a factor's floor is unknown, so the product is only
  // faithful down to max(f_a + m_b, f_b + m_a).
  std::optional<int> floor = min_degree;
  auto raise = [&floor](int f) { floor = floor ? std::max(*floor, f) : f; };
  if (a.floor()) raise(*a.floor() + b.order());
  if (b.floor()) raise(*b.floor() + a.order());

  ParabolicSymbol r = ParabolicSymbol::zero(a.form(), a.order() + b.order());
  r.set_floor(floor);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (floor && ka.degree() + kb.degree() < *floor) continue;
      MultiIndex beta{};
      for (int i = 0; i < kMaxDim; ++i) beta[i] = ka.beta[i] + kb.beta[i];
      r.add_term(ca * cb, beta, ka.lpow + kb.lpow);
    }
  }
  return r;
}

ParabolicSymbol symbol_deriv(const ParabolicSymbol& q, Variable var) {
  const int d = q.dim();
  const QuadraticForm& g = q.quadratic_form();
  switch (var.kind) {
    case Variable::Kind::Tau: {
      // ∂_τ Λ^l = i l Λ^{l-1}
      ParabolicSymbol r = ParabolicSymbol::zero(q.form(), q.order() - 2);
      if (q.floor()) r.set_floor(*q.floor() - 2);
      for (const auto& [k, c] : q.terms())
        if (k.lpow != 0) r.add_term(c * complex(0.0, k.lpow), k.beta, k.lpow - 1);
      return r;
    }
    case Variable::Kind::Xi: {
      const int i = var.index;
      if (i < 0 || i >= d) throw DomainError("ξ index out of range");
      // ∂_{ξ_i} Λ^l = l Λ^{l-1} · 2 Σ_j g^{ij} ξ_j
      ParabolicSymbol r = ParabolicSymbol::zero(q.form(), q.order() - 1);
      if (q.floor()) r.set_floor(*q.floor() - 1);
      for (const auto& [k, c] : q.terms()) {
        if (k.beta[i] > 0) {
          MultiIndex beta = k.beta;
          --beta[i];
          r.add_term(c * complex(k.beta[i]), beta, k.lpow);
        }
        if (k.lpow != 0)
          for (int j = 0; j < d; ++j)
            r.add_term(c * g.entry(i, j) * complex(2.0 * k.lpow), plus_unit(k.beta, j), k.lpow - 1);
      }
      return r;
    }
    case Variable::Kind::X: {
      const int i = var.index;
      if (i < 0 || i >= d) throw DomainError("x index out of range");
      // ∂_{x_i} Λ^l = l Λ^{l-1} (∂_{x_i} G)(ξ,ξ)
      const QuadraticForm dg = g.derivative(i);
      ParabolicSymbol r = ParabolicSymbol::zero(q.form(), q.order());
      r.set_floor(q.floor());
      for (const auto& [k, c] : q.terms()) {
        r.add_term(c.derivative(i), k.beta, k.lpow);
        if (k.lpow == 0 || dg.is_zero()) continue;
        for (int a = 0; a < d; ++a) {
          r.add_term(c * dg.entry(a, a) * complex(k.lpow), plus_unit(plus_unit(k.beta, a), a), k.lpow - 1);
          for (int b = a + 1; b < d; ++b)
            r.add_term(c * dg.entry(a, b) * complex(2.0 * k.lpow), plus_unit(plus_unit(k.beta, a), b),
                       k.lpow - 1);
        }
      }
      return r;
    }
  }
  throw DomainError("unknown derivative variable");
}

complex symbol_eval(const ParabolicSymbol& q, const Point& x, std::span<const double> xi, complex tau) {
  const int d = q.dim();
  if (static_cast<int>(xi.size()) < d) throw ShapeError("ξ has fewer components than the torus dimension");
  if (tau.imag() > 0.0) throw DomainError("τ must lie in the closed lower half-plane");
  const complex lam = complex(0.0, 1.0) * tau + q.quadratic_form()(x, xi);
  complex sum{};
  for (const auto& [k, c] : q.terms()) {
    if (k.lpow < 0 && lam == complex{})
      throw SingularityError("negative power of Λ evaluated at Λ = 0");
    complex mono = ipow(lam, k.lpow);
    for (int i = 0; i < d; ++i) mono *= ipow(xi[i], k.beta[i]);
    sum += c(x) * mono;
  }
  return sum;
}

bool approx_equal(const ParabolicSymbol& a, const ParabolicSymbol& b, double rel_tol) {
  if (!same_form(a, b)) return false;
  const double scale = std::max({1.0, a.max_abs_coefficient(), b.max_abs_coefficient()});
  auto within = [&](const ParabolicSymbol& p, const ParabolicSymbol& other) {
    for (const auto& [k, c] : p.terms()) {
      auto it = other.terms().find(k);
      const TrigPolynomial diff = it == other.terms().end() ? c : c - it->second;
      if (diff.max_abs() > rel_tol * scale) return false;
    }
    return true;
  };
  return within(a, b) && within(b, a);
}

}  // namespace volterra
