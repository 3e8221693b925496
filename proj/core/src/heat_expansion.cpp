#include "volterra/heat_expansion.hpp"

#include <cmath>

#include "volterra/errors.hpp"
#include "volterra/gaussian.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int abs_index(const MultiIndex& b) { return b[0] + b[1]; }

}  // namespace

const TrigPolynomial& HeatExpansion::q(int j) const {
  for (const auto& t : terms)
    if (t.j == j) return t.q;
  throw DomainError("heat coefficient q_" + std::to_string(j) + " was not computed");
}

double HeatExpansion::evaluate(const Point& x, double t) const {
  double sum = 0.0;
  for (const auto& term : terms) sum += std::pow(t, term.exponent) * term.q(x).real();
  return sum;
}

TrigPolynomial diagonal_coefficient(const ParabolicSymbol& piece) {
  const int d = piece.dim();
  const double norm = std::pow(2.0 * M_PI, -d);
  const QuadraticForm& g = piece.quadratic_form();

  if (g.is_constant()) {
    // Moments are numbers; coefficients stay exact trig polynomials.
    const Eigen::MatrixXd G = g.matrix_at(Point{});
    TrigPolynomial out(d);
    for (const auto& [key, c] : piece.terms()) {
      if (key.lpow >= 0) throw DomainError("diagonal coefficient needs negative Λ powers");
      if (abs_index(key.beta) % 2 == 1) continue;
      const double m = gaussian_moment(key.beta, G);
      if (m != 0.0) out += c * complex(norm * m / factorial(-key.lpow - 1));
    }
    return out;
  }

  const auto grid = uniform_grid(d, kHeatSampleGrid);
  std::vector<complex> samples(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const Eigen::MatrixXd G = g.matrix_at(grid[i]);
    complex v{};
    for (const auto& [key, c] : piece.terms()) {
      if (key.lpow >= 0) throw DomainError("diagonal coefficient needs negative Λ powers");
      if (abs_index(key.beta) % 2 == 1) continue;
      v += c(grid[i]) * (norm * gaussian_moment(key.beta, G) / factorial(-key.lpow - 1));
    }
    samples[i] = v;
  });
  return interpolate_on_grid(d, kHeatSampleGrid, samples, 1e-14);
}

HeatExpansion heat_coefficients(const OperatorSpec& op, int J) {
  if (J < 0 || J > 8) throw DomainError("J must lie in [0, 8]");
  op.validate();
  const Parametrix par = parametrix(operator_symbol(op), J + 1);
  HeatExpansion h;
  h.dim = op.dim;
  h.log_coefficient = TrigPolynomial(op.dim);
  for (int j = 0; j <= J; ++j) {
    const ParabolicSymbol piece = par.symbol.graded_piece(-2 - j);
    h.terms.push_back(HeatCoefficient{j, 0.5 * (j - op.dim), diagonal_coefficient(piece)});
  }
  return h;
}

}  // namespace volterra
