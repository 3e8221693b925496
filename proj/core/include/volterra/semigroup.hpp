#pragma once

#include <vector>

#include <Eigen/Dense>

#include "volterra/operator_spec.hpp"

namespace volterra {

/// Fourier–Galerkin matrix of A on {e^{i⟨k,x⟩}: |k_i| <= n}.
struct DiscretizedOperator {
  int dim = 1;
  int modes = 0;
  std::vector<MultiIndex> basis;
  /// ⟨e_k, A e_l⟩ in the orthonormal Fourier basis.
  Eigen::MatrixXcd matrix;
  /// (M + M*)/2.
  Eigen::MatrixXcd hermitian_part;
  /// ‖M − M*‖ <= 1e-12 ‖M‖.
  bool self_adjoint = false;
  bool diagonal = false;

  Eigen::Index size() const { return matrix.rows(); }
  double min_eigenvalue() const;
};

DiscretizedOperator discretize(const OperatorSpec& op, int n);
/// Wraps a plain square matrix (no Fourier basis).
DiscretizedOperator from_matrix(const Eigen::MatrixXcd& m);

/// Composite Gauss–Legendre rule for s ∈ [0, s_max] on the rays λ = −1 + s(1 ± i).
///
/// Panels of width `panel_width` cover the stretch where e^{−tλ}(Q−λ)^{−1}
/// still oscillates against the spectrum, s <= (ρ+1)/2 + margin; beyond it
/// panels grow geometrically up to s_max = max(40, 40/t).
struct ContourQuadrature {
  int nodes_per_panel = 16;
  double panel_width = 0.5;
  double margin = 8.0;
  double growth = 1.5;

  struct Rule {
    std::vector<double> s;
    std::vector<double> w;
  };

  static double s_max(double t);
  Rule rule(double t, double spectral_bound) const;
};

/// Upper bound on |λ| over the spectrum (Gershgorin).
double spectral_bound(const Eigen::MatrixXcd& Q);
double spectral_norm(const Eigen::MatrixXcd& M);

/// (1/2πi)∫_Γ e^{−tλ}(Q−λ)^{−1} dλ, lower ray in, upper ray out.
Eigen::MatrixXcd dunford_heat(const Eigen::MatrixXcd& Q, double t, const ContourQuadrature& quad = {});
Eigen::MatrixXcd dunford_heat(const DiscretizedOperator& Q, double t, const ContourQuadrature& quad = {});

/// e^{−tQ} through an eigendecomposition.
Eigen::MatrixXcd eig_heat(const Eigen::MatrixXcd& Q, double t);

struct HilleYosida {
  /// λ − λ²(Q+λ)^{−1}.
  Eigen::MatrixXcd value;
  /// ‖value − λQ(Q+λ)^{−1}‖₂.
  double form_discrepancy = 0.0;
};

HilleYosida hille_yosida(const Eigen::MatrixXcd& Q, double lambda);
/// e^{−tQ_λ}.
Eigen::MatrixXcd hy_heat(const Eigen::MatrixXcd& Q, double lambda, double t);

/// Points −1 + s(1 ± i), s = k·s_max/per_ray for k = 1..per_ray.
std::vector<complex> contour_samples(int per_ray, double s_max);

/// max over samples of ‖(Q−λ)^{−1}‖₂·(1 + |Im λ|).
double resolvent_bound_check(const Eigen::MatrixXcd& Q, const std::vector<complex>& samples);

}  // namespace volterra
