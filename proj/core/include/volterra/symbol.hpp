#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "volterra/quadratic_form.hpp"
#include "volterra/trig_polynomial.hpp"

namespace volterra {

using FormPtr = std::shared_ptr<const QuadraticForm>;

/// coeff(x)·ξ^β·Λ^l with Λ(x,ξ,τ) = iτ + G(x)(ξ,ξ).
struct SymbolTerm {
  TrigPolynomial coeff;
  MultiIndex beta{};
  int lpow = 0;
};

/// Parabolic degree |β| + 2l.
int term_degree(const SymbolTerm& term);

/// ‖(ξ,τ)‖ = (|ξ|² + |τ|)^{1/2}, homogeneous of degree one under (ξ,τ) ↦ (λξ, λ²τ).
double anisotropic_norm(std::span<const double> xi, complex tau);

/// Variable for symbol_deriv.
struct Variable {
  enum class Kind { Xi, X, Tau };
  Kind kind;
  int index = 0;

  static Variable xi(int i) { return {Kind::Xi, i}; }
  static Variable x(int i) { return {Kind::X, i}; }
  static Variable tau() { return {Kind::Tau, 0}; }
};

/// Graded sum of parabolically homogeneous terms over a fixed reference form G.
///
/// Terms are kept in canonical form: free powers of τ never appear, because
/// iτ = Λ − G(ξ,ξ). With τ eliminated the monomials ξ^β Λ^l are linearly
/// independent over functions of x, so each (β, l) owns exactly one
/// coefficient and symbolic zero is decidable coefficient by coefficient.
///
/// `floor()` is the lowest degree that is represented faithfully; pieces
/// below it have been discarded (empty for exact symbols).
class ParabolicSymbol {
 public:
  struct Key {
    MultiIndex beta{};
    int lpow = 0;

    int degree() const;
    /// Descending degree, then ascending Λ power, then β.
    friend std::strong_ordering operator<=>(const Key& a, const Key& b);
    friend bool operator==(const Key& a, const Key& b) = default;
  };

  ParabolicSymbol(FormPtr form, int order);

  static ParabolicSymbol zero(FormPtr form, int order);
  static ParabolicSymbol constant(FormPtr form, complex c);
  static ParabolicSymbol one(FormPtr form) { return constant(std::move(form), 1.0); }
  /// Λ^l, of order 2l.
  static ParabolicSymbol resolvent_power(FormPtr form, int l);
  /// iτ written canonically as Λ − G(ξ,ξ).
  static ParabolicSymbol i_tau(FormPtr form);
  /// Σ h^{ij}(x) ξ_i ξ_j as a ξ-polynomial over `form`.
  static ParabolicSymbol quadratic(FormPtr form, const QuadraticForm& h);
  static ParabolicSymbol from_term(FormPtr form, const SymbolTerm& term);

  int dim() const { return form_->dim(); }
  int order() const { return order_; }
  const FormPtr& form() const { return form_; }
  const QuadraticForm& quadratic_form() const { return *form_; }
  std::optional<int> floor() const { return floor_; }
  void set_floor(std::optional<int> floor) { floor_ = floor; }

  const std::map<Key, TrigPolynomial>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SymbolTerm& term);
  void add_term(const TrigPolynomial& coeff, const MultiIndex& beta, int lpow);

  /// Degrees carrying at least one nonzero term, highest first.
  std::vector<int> degrees() const;
  std::optional<int> leading_degree() const;
  std::vector<SymbolTerm> piece(int degree) const;
  /// The degree-s piece as a symbol of order s.
  ParabolicSymbol graded_piece(int degree) const;
  /// Drops every piece of degree below `min_degree`.
  ParabolicSymbol truncated(int min_degree) const;
  /// Same terms, declared order `order` (must dominate every stored degree).
  ParabolicSymbol with_order(int order) const;

  /// True when every term has Λ power <= -1 (integrable in τ).
  bool all_negative_powers() const;
  /// True when no term has a negative Λ power (polynomial in ξ and τ).
  bool is_polynomial() const;
  /// Largest |amplitude| over all coefficients.
  double max_abs_coefficient() const;

  complex operator()(const Point& x, std::span<const double> xi, complex tau) const;

  ParabolicSymbol& operator+=(const ParabolicSymbol& other);
  ParabolicSymbol& operator-=(const ParabolicSymbol& other);
  ParabolicSymbol& operator*=(complex s);
  ParabolicSymbol operator-() const;

  friend ParabolicSymbol operator+(ParabolicSymbol a, const ParabolicSymbol& b) { return a += b; }
  friend ParabolicSymbol operator-(ParabolicSymbol a, const ParabolicSymbol& b) { return a -= b; }
  friend ParabolicSymbol operator*(ParabolicSymbol a, complex s) { return a *= s; }
  friend ParabolicSymbol operator*(complex s, ParabolicSymbol a) { return a *= s; }
  friend ParabolicSymbol operator*(const ParabolicSymbol& a, const ParabolicSymbol& b);

  /// Exact equality of form, order and every coefficient.
  friend bool operator==(const ParabolicSymbol& a, const ParabolicSymbol& b);

 private:
  void require_same_form(const ParabolicSymbol& other) const;

  FormPtr form_;
  int order_;
  std::optional<int> floor_;
  std::map<Key, TrigPolynomial> terms_;
};

/// True when both symbols are built over equal reference forms.
bool same_form(const ParabolicSymbol& a, const ParabolicSymbol& b);

/// (x,ξ,τ) ↦ q(x, λξ, λ²τ): the degree-s piece is scaled by λ^s.
ParabolicSymbol dilate(const ParabolicSymbol& q, double lambda);

/// Pointwise product. Pieces below `min_degree` are never formed.
ParabolicSymbol symbol_mul(const ParabolicSymbol& a, const ParabolicSymbol& b,
                           std::optional<int> min_degree = std::nullopt);

/// Exact derivative in ξ_i, x_i or τ, kept in canonical form.
ParabolicSymbol symbol_deriv(const ParabolicSymbol& q, Variable var);

/// q(x, ξ, τ) for Im τ <= 0.
complex symbol_eval(const ParabolicSymbol& q, const Point& x, std::span<const double> xi, complex tau);

/// Coefficient-wise comparison, tolerance relative to the larger coefficient scale.
bool approx_equal(const ParabolicSymbol& a, const ParabolicSymbol& b, double rel_tol);

}  // namespace volterra
