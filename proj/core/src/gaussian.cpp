#include "volterra/gaussian.hpp"

#include <cmath>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

struct Factored {
  Eigen::MatrixXd cov;  // ½ G^{-1}
  double norm;          // π^{d/2} det(G)^{-1/2}
};

Factored factor(const Eigen::MatrixXd& G) {
  if (G.rows() != G.cols() || G.rows() < 1 || G.rows() > kMaxDim) throw ShapeError("Gaussian form must be d×d, d <= 2");
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success || !(G.diagonal().array() > 0.0).all())
    throw DomainError("Gaussian form is not positive definite");
  const Eigen::Index d = G.rows();
  const double det = llt.matrixL().toDenseMatrix().diagonal().prod();  // sqrt(det G)
  const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(d, d));
  return {0.5 * inv, std::pow(M_PI, 0.5 * double(d)) / det};
}

/// E[η^β] for centered η with covariance `cov` (Isserlis).
double centered_moment(MultiIndex beta, const Eigen::MatrixXd& cov) {
  int total = 0;
  int a = -1;
  for (int i = 0; i < cov.rows(); ++i) {
    total += beta[i];
    if (a < 0 && beta[i] > 0) a = i;
  }
  if (total == 0) return 1.0;
  if (total % 2 == 1) return 0.0;
  // Pair one copy of η_a with each remaining factor.
  --beta[a];
  double sum = 0.0;
  for (int b = 0; b < cov.rows(); ++b) {
    if (beta[b] == 0 || cov(a, b) == 0.0) continue;
    MultiIndex rest = beta;
    --rest[b];
    sum += beta[b] * cov(a, b) * centered_moment(rest, cov);
  }
  return sum;
}

complex ipow(complex z, int n) {
  complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double gaussian_moment(const MultiIndex& beta, const Eigen::MatrixXd& G) {
  const Factored f = factor(G);
  return f.norm * centered_moment(beta, f.cov);
}

complex shifted_gaussian_moment(const MultiIndex& beta, const Eigen::MatrixXd& B, std::span<const double> zeta) {
  const Factored f = factor(B);
  const Eigen::Index d = B.rows();
  if (static_cast<Eigen::Index>(zeta.size()) < d) throw ShapeError("ζ has fewer components than the dimension");
  Eigen::VectorXd z(d);
  for (Eigen::Index i = 0; i < d; ++i) z[i] = zeta[i];
  // −ξᵀBξ + i⟨ζ,ξ⟩ = −(ξ−μ)ᵀB(ξ−μ) − ¼ζᵀB^{-1}ζ with μ = (i/2)B^{-1}ζ.
  const Eigen::VectorXd half_inv_z = f.cov * z;  // ½B^{-1}ζ
  const double envelope = std::exp(-0.5 * z.dot(half_inv_z));
  std::array<complex, kMaxDim> mu{};
  for (Eigen::Index i = 0; i < d; ++i) mu[i] = complex(0.0, half_inv_z[i]);

  // E[(μ+η)^β] = Σ_{γ<=β} C(β,γ) μ^{β−γ} E[η^γ].
  complex sum{};
  const int g1max = d > 1 ? beta[1] : 0;
  for (int g0 = 0; g0 <= beta[0]; ++g0) {
    for (int g1 = 0; g1 <= g1max; ++g1) {
      const double m = centered_moment(MultiIndex{g0, g1}, f.cov);
      if (m == 0.0) continue;
      complex shift = binomial(beta[0], g0) * ipow(mu[0], beta[0] - g0);
      if (d > 1) shift *= binomial(beta[1], g1) * ipow(mu[1], beta[1] - g1);
      sum += shift * m;
    }
  }
  return f.norm * envelope * sum;
}

}  // namespace volterra
