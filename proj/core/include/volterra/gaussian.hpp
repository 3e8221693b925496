#pragma once

#include <Eigen/Dense>

#include "volterra/trig_polynomial.hpp"

namespace volterra {

/// ∫_{R^d} ξ^β e^{−ξᵀGξ} dξ for symmetric positive definite G.
double gaussian_moment(const MultiIndex& beta, const Eigen::MatrixXd& G);

/// ∫_{R^d} ξ^β e^{−ξᵀBξ + i⟨ζ,ξ⟩} dξ for symmetric positive definite B.
complex shifted_gaussian_moment(const MultiIndex& beta, const Eigen::MatrixXd& B, std::span<const double> zeta);

}  // namespace volterra
