#include "volterra/fit.hpp"

#include <algorithm>
#include <cmath>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

constexpr double kMaxCondition = 1e12;

/// Eigen-pairs (values, right vectors, left rows) with Q = V diag(λ) W.
struct Spectrum {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd right;
  Eigen::MatrixXcd left;
};

Spectrum decompose(const DiscretizedOperator& D) {
  const Eigen::Index n = D.size();
  Spectrum s;
  if (D.diagonal) {
    s.values = D.matrix.diagonal();
    s.right = Eigen::MatrixXcd::Identity(n, n);
    s.left = s.right;
  } else if (D.self_adjoint) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D.hermitian_part);
    s.values = es.eigenvalues().cast<complex>();
    s.right = es.eigenvectors();
    s.left = s.right.adjoint();
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(D.matrix);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    s.values = es.eigenvalues();
    s.right = es.eigenvectors();
    s.left = s.right.partialPivLu().inverse();
  }
  return s;
}

}  // namespace

double DiagonalFit::max_abs_log() const {
  double m = 0.0;
  for (double v : log_coefficient) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> geometric_times(double t_min, double t_max, int count) {
  if (!(t_min > 0.0) || !(t_max >= t_min) || count < 2) throw DomainError("invalid geometric time grid");
  std::vector<double> t(count);
  const double ratio = std::log(t_max / t_min) / (count - 1);
  for (int i = 0; i < count; ++i) t[i] = t_min * std::exp(ratio * i);
  return t;
}

int resolved_modes(double t_min, double metric_floor) {
  if (!(t_min > 0.0)) throw DomainError("time must be positive");
  if (!(metric_floor > 0.0)) throw DomainError("metric floor must be positive");
  return std::max(4, int(std::ceil(std::sqrt(30.0 / (t_min * metric_floor)))));
}

Eigen::MatrixXd heat_diagonal(const DiscretizedOperator& D, const std::vector<Point>& points,
                              const std::vector<double>& times) {
  if (D.basis.empty()) throw DomainError("heat diagonal needs a Fourier discretization");
  const Spectrum s = decompose(D);
  const Eigen::Index n = D.size();
  const Eigen::Index P = Eigen::Index(points.size());
  // K(x,x,t) = (2π)^{−d} φ(x)ᵀ V e^{−tΛ} W conj(φ(x)), φ_k(x) = e^{i⟨k,x⟩}.
  Eigen::MatrixXcd phi(P, n);
  for (Eigen::Index p = 0; p < P; ++p)
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& b = D.basis[k];
      phi(p, k) = std::polar(1.0, b[0] * points[p][0] + b[1] * points[p][1]);
    }
  const Eigen::MatrixXcd a = phi * s.right;             // P × n
  const Eigen::MatrixXcd b = s.left * phi.adjoint();    // n × P
  const Eigen::MatrixXcd weight = a.cwiseProduct(b.transpose());
  const double norm = std::pow(2.0 * M_PI, -D.dim);

  Eigen::MatrixXd out(P, Eigen::Index(times.size()));
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Eigen::VectorXcd decay = (-times[i] * s.values.array()).exp();
    out.col(Eigen::Index(i)) = norm * (weight * decay).real();
  }
  return out;
}

DiagonalFit fit_diagonal_expansion(const OperatorSpec& op, const std::vector<double>& times, int J, bool with_log,
                                   int grid_points, int modes) {
  if (J < 0) throw DomainError("J must be nonnegative");
  if (times.size() < std::size_t(2 * (J + 2)))
    throw DomainError("fit needs at least 2(J+2) time samples");
  for (double t : times)
    if (!(t > 0.0) || t > 0.5) throw DomainError("fit times must lie in (0, 0.5]");
  const double t_min = *std::min_element(times.begin(), times.end());
  if (modes == 0) modes = resolved_modes(t_min, std::min(1.0, op.metric.min_eigenvalue_on_grid()));
  if (t_min * modes * modes < 10.0)
    throw DomainError("mode cutoff too small: t_min·n² must be at least 10");

  const int d = op.dim;
  DiagonalFit fit;
  fit.dim = d;
  fit.J = J;
  fit.modes = modes;
  fit.with_log = with_log;
  fit.times = times;
  fit.points = uniform_grid(d, grid_points);

  const Eigen::MatrixXd diag = heat_diagonal(discretize(op, modes), fit.points, times);

  const Eigen::Index rows = Eigen::Index(times.size());
  const Eigen::Index cols = J + 1 + (with_log ? 1 : 0);
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd weight(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double t = times[r];
    weight[r] = std::pow(t, 0.5 * d);
    for (int j = 0; j <= J; ++j) design(r, j) = std::pow(t, 0.5 * (j - d));
    if (with_log) design(r, J + 1) = std::pow(t, 0.5 * (J - d)) * std::log(t);
  }
  design = weight.asDiagonal() * design;
  const Eigen::VectorXd scale = design.colwise().norm();
  design = design * scale.cwiseInverse().asDiagonal();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  fit.condition = sv(0) / sv(sv.size() - 1);
  if (!(fit.condition <= kMaxCondition))
    throw NumericalError("fit design matrix is ill-conditioned (condition " + std::to_string(fit.condition) +
                         "); widen the time window or lower J");

  const Eigen::MatrixXd rhs = weight.asDiagonal() * diag.transpose();  // times × points
  const Eigen::MatrixXd sol = scale.cwiseInverse().asDiagonal() * svd.solve(rhs);  // cols × points
  fit.coefficients = sol.topRows(J + 1).transpose();
  if (with_log) {
    const Eigen::VectorXd logs = sol.row(J + 1).transpose();
    fit.log_coefficient.assign(logs.data(), logs.data() + logs.size());
  }
  return fit;
}

}  // namespace volterra
