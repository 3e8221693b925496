#include "volterra/causality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "volterra/errors.hpp"

namespace volterra {

CausalityGrid CausalityGrid::defaults(int dim) {
  CausalityGrid g;
  g.power = std::max(g.power, dim + 3);
  return g;
}

CausalityGrid CausalityGrid::parse(const std::string& text) {
  CausalityGrid g;
  std::istringstream in(text);
  char c1 = 0, c2 = 0, c3 = 0;
  if (!(in >> g.nodes >> c1 >> g.half_width >> c2 >> g.eps >> c3 >> g.power) || c1 != ':' || c2 != ':' ||
      c3 != ':' || !(in >> std::ws).eof())
    throw DomainError("grid spec must look like nodes:half_width:eps:power, got '" + text + "'");
  return g;
}

void CausalityGrid::validate(int dim) const {
  if (nodes < 16 || nodes % 2 != 0) throw DomainError("causality grid needs an even node count >= 16");
  if (!(half_width > 0.0)) throw DomainError("causality grid half width must be positive");
  if (!(eps > 0.0)) throw DomainError("regularizer eps must be positive");
  if (power < dim + 3) throw DomainError("regularizer power must be at least d+3");
}

double CausalityGrid::time_step() const { return M_PI / half_width; }

std::vector<CausalitySample> default_causality_samples(int dim) {
  if (dim == 1)
    return {{{0.3, 0.0}, {1.5, 0.0}}, {{1.9, 0.0}, {-2.5, 0.0}}, {{4.4, 0.0}, {2.0, 0.0}}};
  return {{{0.3, 1.1}, {1.5, 0.5}}, {{1.9, 4.0}, {-0.8, 1.7}}, {{5.0, 2.6}, {1.2, -1.4}}};
}

std::vector<std::pair<double, complex>> regularized_kernel_samples(const std::function<complex(double)>& f,
                                                                   const CausalityGrid& grid) {
  const int n = grid.nodes;
  const double h = 2.0 * grid.half_width / n;
  std::vector<complex> in(n), out(n);
  for (int k = 0; k < n; ++k) {
    const double tau = -grid.half_width + k * h;
    in[k] = f(tau) * std::pow(complex(1.0, grid.eps * tau), -grid.power);
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  // k(t_m) = (h/2π) Σ_k f_k e^{i t_m τ_k}, t_m = m·π/W, τ_k = −W + k h.
  const double dt = grid.time_step();
  std::vector<std::pair<double, complex>> samples;
  samples.reserve(n);
  for (int m = -n / 2; m < n / 2; ++m) {
    const double t = m * dt;
    const complex phase = std::polar(1.0, -t * grid.half_width);
    samples.emplace_back(t, h / (2.0 * M_PI) * phase * out[(m + n) % n]);
  }
  return samples;
}

double causality_ratio(const std::function<complex(double)>& f, const CausalityGrid& grid) {
  const auto samples = regularized_kernel_samples(f, grid);
  const double guard = -2.0 * grid.time_step();
  double before = 0.0;
  double overall = 0.0;
  for (const auto& [t, v] : samples) {
    overall = std::max(overall, std::abs(v));
    if (t < guard) before = std::max(before, std::abs(v));
  }
  return overall == 0.0 ? 0.0 : before / overall;
}

double causality_check(const ParabolicSymbol& q, const CausalityGrid& grid,
                       const std::vector<CausalitySample>& samples) {
  grid.validate(q.dim());
  if (samples.empty()) throw DomainError("causality check needs at least one probe point");
  if (q.is_zero()) return 0.0;
  double worst = 0.0;
  for (const auto& s : samples) {
    auto f = [&](double tau) { return symbol_eval(q, s.x, s.xi, complex(tau, 0.0)); };
    worst = std::max(worst, causality_ratio(f, grid));
  }
  return worst;
}

double causality_check(const ParabolicSymbol& q, const CausalityGrid& grid) {
  return causality_check(q, grid, default_causality_samples(q.dim()));
}

double causality_check(const CausalKernel& k, const CausalityGrid& grid) {
  return causality_check(k.to_symbol(), grid);
}

}  // namespace volterra
