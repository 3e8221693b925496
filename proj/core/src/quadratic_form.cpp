#include "volterra/quadratic_form.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "volterra/errors.hpp"

namespace volterra {

QuadraticForm::QuadraticForm(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("torus dimension must be 1 or 2");
  for (auto& e : entries_) e = TrigPolynomial(dim);
}

QuadraticForm QuadraticForm::identity(int dim) {
  QuadraticForm g(dim);
  for (int i = 0; i < dim; ++i) g.set_entry(i, i, TrigPolynomial::constant(dim, 1.0));
  return g;
}

QuadraticForm QuadraticForm::diagonal(int dim, const std::array<TrigPolynomial, kMaxDim>& entries) {
  QuadraticForm g(dim);
  for (int i = 0; i < dim; ++i) g.set_entry(i, i, entries[i]);
  return g;
}

int QuadraticForm::slot(int i, int j) {
  if (i > j) std::swap(i, j);
  return i == 0 ? j : 2;
}

const TrigPolynomial& QuadraticForm::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DomainError("metric index out of range");
  return entries_[slot(i, j)];
}

void QuadraticForm::set_entry(int i, int j, TrigPolynomial value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DomainError("metric index out of range");
  if (value.dim() != dim_) throw DomainError("metric entry has the wrong dimension");
  entries_[slot(i, j)] = std::move(value);
}

bool QuadraticForm::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TrigPolynomial& e) { return e.is_constant(); });
}

bool QuadraticForm::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TrigPolynomial& e) { return e.is_zero(); });
}

complex QuadraticForm::operator()(const Point& x, std::span<const double> xi) const {
  complex sum{};
  for (int i = 0; i < dim_; ++i) {
    sum += entry(i, i)(x) * xi[i] * xi[i];
    for (int j = i + 1; j < dim_; ++j) sum += 2.0 * entry(i, j)(x) * xi[i] * xi[j];
  }
  return sum;
}

Eigen::MatrixXd QuadraticForm::matrix_at(const Point& x) const {
  Eigen::MatrixXd m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = entry(i, j)(x).real();
  return m;
}

QuadraticForm QuadraticForm::derivative(int axis) const {
  QuadraticForm d(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) d.set_entry(i, j, entry(i, j).derivative(axis));
  return d;
}

double QuadraticForm::min_eigenvalue_on_grid(int points) const {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& x : uniform_grid(dim_, points)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix_at(x), Eigen::EigenvaluesOnly);
    lowest = std::min(lowest, es.eigenvalues().minCoeff());
  }
  return lowest;
}

void QuadraticForm::require_positive_definite(int points, double floor) const {
  const double lowest = min_eigenvalue_on_grid(points);
  if (!(lowest >= floor))
    throw DomainError("metric is not positive definite (min eigenvalue " + std::to_string(lowest) +
                      ")");
}

bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

}  // namespace volterra
