#pragma once

#include <vector>

#include <Eigen/Dense>

#include "volterra/operator_spec.hpp"
#include "volterra/semigroup.hpp"

namespace volterra {

/// Least-squares coefficients of diag(x, t) ≈ Σ_j ĉ_j(x) t^{(j−d)/2} [+ ĉ_log(x) t^{(J−d)/2} log t].
struct DiagonalFit {
  int dim = 1;
  int J = 0;
  int modes = 0;
  bool with_log = false;
  std::vector<double> times;
  std::vector<Point> points;
  /// points × (J+1).
  Eigen::MatrixXd coefficients;
  /// One entry per point; empty without the log column.
  std::vector<double> log_coefficient;
  /// Condition number of the column-normalized weighted design matrix.
  double condition = 0.0;

  double coefficient(std::size_t point, int j) const { return coefficients(Eigen::Index(point), j); }
  double max_abs_log() const;
};

/// `count` geometrically spaced times in [t_min, t_max].
std::vector<double> geometric_times(double t_min, double t_max, int count);

/// Smallest n with t_min·g_min·n² >= 30, where g_min bounds the metric from below.
/// The symbol e^{−t g(x)ξ²} is then below e^{−30} at the cutoff.
int resolved_modes(double t_min, double metric_floor = 1.0);

/// k_t(x, x) for every point and time, from an eigendecomposition of the Galerkin matrix.
/// Result is points × times.
Eigen::MatrixXd heat_diagonal(const DiscretizedOperator& D, const std::vector<Point>& points,
                              const std::vector<double>& times);

/// Fits the diagonal of e^{−tA} on a uniform grid of `grid_points` per axis.
/// `modes` = 0 picks resolved_modes(min time, min(1, metric floor)).
DiagonalFit fit_diagonal_expansion(const OperatorSpec& op, const std::vector<double>& times, int J, bool with_log,
                                   int grid_points = 32, int modes = 0);

}  // namespace volterra
