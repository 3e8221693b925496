#include "volterra/deform.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "volterra/calculus.hpp"
#include "volterra/errors.hpp"

namespace volterra {

int Filtration::homogeneous_dimension() const {
  const auto dims = subspace_dims();
  return weights[0] * dims[0] + weights[1] * (dims[1] - dims[0]);
}

ParabolicSymbol rescale_symbol(const ParabolicSymbol& q, double hbar) {
  if (!(hbar >= 0.0 && hbar <= 1.0)) throw DomainError("ħ must lie in [0, 1]");
  if (hbar == 0.0) return principal_part(q);
  return dilate(q, hbar);
}

ParabolicSymbol model_approximant(const ParabolicSymbol& q, double hbar) {
  if (!(hbar >= 0.0 && hbar <= 1.0)) throw DomainError("ħ must lie in [0, 1]");
  if (hbar == 0.0) return principal_part(q);
  return dilate(q, 1.0 / hbar) * complex(std::pow(hbar, q.order()));
}

CausalKernel rescale_kernel(const CausalKernel& k, double hbar) {
  if (hbar == 0.0) throw DomainError("ħ = 0 is the model kernel; use ScaledFamily::model_kernel");
  if (!(hbar > 0.0 && hbar <= 1.0)) throw DomainError("ħ must lie in (0, 1]");
  const int d = k.dim();
  CausalKernel out(k.form());
  for (const auto& p : k.pieces()) {
    // Substituting ξ = η/ħ in the ξ-integral gives ħ^{2p − |β| − d}.
    const int exponent = 2 * p.tpow - (p.beta[0] + p.beta[1]) - 2 * d - 2;
    out.add_piece(KernelPiece{p.coeff * complex(std::pow(hbar, exponent)), p.beta, p.tpow});
  }
  return out;
}

ScaledFamily::ScaledFamily(ParabolicSymbol base) : base_(std::move(base)) {
  if (!base_.all_negative_powers()) throw DomainError("kernel families need symbols with negative Λ powers only");
}

CausalKernel ScaledFamily::kernel(double hbar) const { return rescale_kernel(causal_kernel(base_), hbar); }

CausalKernel ScaledFamily::model_kernel() const { return causal_kernel(principal_part(base_)); }

HomogeneityDefect homogeneity_defect(const ScaledFamily& family, double lambda,
                                     const std::vector<KernelSample>& samples) {
  if (!(lambda > 0.0)) throw DomainError("λ must be positive");
  const int d = family.dim();
  const CausalKernel k = family.kernel(1.0);
  const CausalKernel model = family.model_kernel();
  const double norm = std::pow(lambda, -family.order() - d - 2);
  HomogeneityDefect out;
  for (const auto& s : samples) {
    std::array<double, kMaxDim> z{};
    for (int i = 0; i < d; ++i) z[i] = s.zeta[i] / lambda;
    const complex v = norm * k.spatial(s.x, z, s.t / (lambda * lambda)) - model.spatial(s.x, s.zeta, s.t);
    out.field.push_back(v);
    out.sup = std::max(out.sup, std::abs(v));
  }
  return out;
}

std::vector<KernelSample> default_kernel_samples(int dim) {
  std::vector<KernelSample> out;
  const std::array<Point, 2> bases = dim == 1 ? std::array<Point, 2>{Point{0.4, 0.0}, Point{2.3, 0.0}}
                                              : std::array<Point, 2>{Point{0.4, 1.7}, Point{2.3, 5.1}};
  const double zs[] = {-1.0, -0.3, 0.0, 0.5, 1.2};
  for (const auto& x : bases)
    for (double t : {0.25, 0.5, 1.0, 2.0})
      for (double z0 : zs) {
        if (dim == 1) {
          out.push_back({x, {z0, 0.0}, t});
          continue;
        }
        for (double z1 : {-0.6, 0.0, 0.9}) out.push_back({x, {z0, z1}, t});
      }
  return out;
}

double measure_scaling_check(double lambda, int dim) {
  if (!(lambda > 0.0)) throw DomainError("λ must be positive");
  if (dim < 1) throw DomainError("dimension must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(dim + 1, lambda);
  diag[dim] = lambda * lambda;
  const Eigen::MatrixXd jacobian = diag.asDiagonal();
  return jacobian.determinant();
}

Cutoff rescale_cutoff(Cutoff chi, double eps, int dim) {
  if (!(eps > 0.0)) throw DomainError("ε must be positive");
  const double norm = std::pow(eps, -(dim + 2));
  return [chi = std::move(chi), eps, dim, norm](std::span<const double> zeta, double t) {
    std::array<double, kMaxDim> z{};
    for (int i = 0; i < dim; ++i) z[i] = zeta[i] / eps;
    return norm * chi(std::span<const double>(z.data(), dim), t / (eps * eps));
  };
}

}  // namespace volterra
