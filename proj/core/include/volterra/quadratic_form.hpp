#pragma once

#include <Eigen/Dense>

#include "volterra/trig_polynomial.hpp"

namespace volterra {

/// Symmetric form G(x)(ξ,ξ) = Σ g^{ij}(x) ξ_i ξ_j with trigonometric-polynomial entries.
///
/// Only the upper triangle is stored, so g^{ij} and g^{ji} are the same object.
/// Positivity is not enforced here because derivatives ∂_x G are also forms;
/// call `min_eigenvalue_on_grid` / `require_positive_definite` where it matters.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(int dim);

  static QuadraticForm identity(int dim);
  /// Diagonal form with g^{ii} = entries[i].
  static QuadraticForm diagonal(int dim, const std::array<TrigPolynomial, kMaxDim>& entries);

  int dim() const { return dim_; }

  const TrigPolynomial& entry(int i, int j) const;
  void set_entry(int i, int j, TrigPolynomial value);

  bool is_constant() const;
  bool is_zero() const;

  /// G(x)(ξ,ξ).
  complex operator()(const Point& x, std::span<const double> xi) const;
  /// Real part of [g^{ij}(x)] as a d×d matrix.
  Eigen::MatrixXd matrix_at(const Point& x) const;

  /// Entry-wise ∂_{x_axis}.
  QuadraticForm derivative(int axis) const;

  /// Minimum eigenvalue of [g^{ij}(x)] over the uniform grid with `points` nodes per axis.
  double min_eigenvalue_on_grid(int points = 64) const;
  /// Throws DomainError unless min_eigenvalue_on_grid(points) >= floor.
  void require_positive_definite(int points = 64, double floor = 1e-8) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b);

 private:
  static int slot(int i, int j);

  int dim_ = 1;
  // Upper triangle: (0,0), (0,1), (1,1).
  std::array<TrigPolynomial, 3> entries_{};
};

}  // namespace volterra
