#include "volterra/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/quadrature/gauss.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "volterra/errors.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

namespace {

constexpr complex kI{0.0, 1.0};

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
template <int N>
void legendre(std::vector<double>& x, std::vector<double>& w) {
  using rule = boost::math::quadrature::gauss<double, N>;
  const auto& a = rule::abscissa();
  const auto& wt = rule::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      x.push_back(0.0);
      w.push_back(wt[i]);
      continue;
    }
    x.push_back(-a[i]);
    w.push_back(wt[i]);
    x.push_back(a[i]);
    w.push_back(wt[i]);
  }
}

void legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  switch (n) {
    case 8: legendre<8>(x, w); break;
    case 16: legendre<16>(x, w); break;
    case 24: legendre<24>(x, w); break;
    case 32: legendre<32>(x, w); break;
    default: throw DomainError("Gauss–Legendre panels support 8, 16, 24 or 32 nodes");
  }
}

bool is_hermitian(const Eigen::MatrixXcd& m, double rel) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel * scale;
}

}  // namespace

double DiscretizedOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DiscretizedOperator discretize(const OperatorSpec& op, int n) {
  if (n < 4) throw DomainError("mode cutoff n must be at least 4");
  op.validate();
  const int d = op.dim;
  DiscretizedOperator D;
  D.dim = d;
  D.modes = n;
  if (d == 1) {
    for (int k = -n; k <= n; ++k) D.basis.push_back(MultiIndex{k, 0});
  } else {
    for (int k0 = -n; k0 <= n; ++k0)
      for (int k1 = -n; k1 <= n; ++k1) D.basis.push_back(MultiIndex{k0, k1});
  }
  std::map<MultiIndex, Eigen::Index> index;
  for (std::size_t i = 0; i < D.basis.size(); ++i) index.emplace(D.basis[i], Eigen::Index(i));

  // Every frequency f carried by some coefficient, with its stencil value as a function of l.
  std::map<MultiIndex, bool> freqs;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j)
      for (const auto& [f, a] : op.metric.entry(i, j).terms()) freqs[f] = true;
    for (const auto& [f, a] : op.drift[i].terms()) freqs[f] = true;
  }
  for (const auto& [f, a] : op.potential.terms()) freqs[f] = true;

  const Eigen::Index N = Eigen::Index(D.basis.size());
  D.matrix = Eigen::MatrixXcd::Zero(N, N);
  for (Eigen::Index c = 0; c < N; ++c) {
    const MultiIndex& l = D.basis[c];
    for (const auto& [f, unused] : freqs) {
      const MultiIndex k{l[0] + f[0], l[1] + f[1]};
      auto it = index.find(k);
      if (it == index.end()) continue;
      complex v = op.potential.coefficient(f);
      for (int i = 0; i < d; ++i) {
        v += kI * op.drift[i].coefficient(f) * double(l[i]);
        for (int j = 0; j < d; ++j) v += op.metric.entry(i, j).coefficient(f) * double(l[i] * l[j]);
      }
      D.matrix(it->second, c) += v;
    }
  }
  D.hermitian_part = 0.5 * (D.matrix + D.matrix.adjoint());
  D.self_adjoint = is_hermitian(D.matrix, 1e-12);
  D.diagonal = D.matrix.isDiagonal(0.0);
  return D;
}

DiscretizedOperator from_matrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw ShapeError("operator matrix must be square and nonempty");
  DiscretizedOperator D;
  D.dim = 0;
  D.matrix = m;
  D.hermitian_part = 0.5 * (m + m.adjoint());
  D.self_adjoint = is_hermitian(m, 1e-12);
  D.diagonal = m.isDiagonal(0.0);
  return D;
}

double ContourQuadrature::s_max(double t) { return std::max(40.0, 40.0 / t); }

ContourQuadrature::Rule ContourQuadrature::rule(double t, double bound) const {
  if (!(t > 0.0)) throw DomainError("time must be positive");
  if (!(panel_width > 0.0) || !(growth >= 1.0)) throw DomainError("invalid contour panel layout");
  std::vector<double> x, w;
  legendre_rule(nodes_per_panel, x, w);

  const double top = s_max(t);
  const double fine = std::min(top, 0.5 * (bound + 1.0) + margin);
  std::vector<double> edges{0.0};
  while (edges.back() < fine) edges.push_back(std::min(fine, edges.back() + panel_width));
  double width = panel_width;
  while (edges.back() < top) {
    width *= growth;
    edges.push_back(std::min(top, edges.back() + width));
  }

  Rule r;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.s.push_back(mid + half * x[i]);
      r.w.push_back(half * w[i]);
    }
  }
  return r;
}

double spectral_bound(const Eigen::MatrixXcd& Q) { return Q.cwiseAbs().rowwise().sum().maxCoeff(); }

double spectral_norm(const Eigen::MatrixXcd& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd dunford_heat(const Eigen::MatrixXcd& Q, double t, const ContourQuadrature& quad) {
  if (Q.rows() != Q.cols()) throw ShapeError("operator matrix must be square");
  const auto rule = quad.rule(t, spectral_bound(Q));
  const Eigen::Index n = Q.rows();
  const bool hermitian = is_hermitian(Q, 1e-14);
  const complex up(1.0, 1.0);
  const complex down(1.0, -1.0);
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);

  auto node = [&](std::size_t k) -> Eigen::MatrixXcd {
    const complex lu = -1.0 + rule.s[k] * up;
    Eigen::MatrixXcd upper = (Q - lu * eye).partialPivLu().solve(eye);
    if (!upper.allFinite()) throw NumericalError("contour node hit the spectrum");
    upper *= rule.w[k] * std::exp(-t * lu) * up;
    // For Hermitian Q the lower ray contributes the adjoint of the upper one.
    if (hermitian) return upper - upper.adjoint();
    const complex ll = -1.0 + rule.s[k] * down;
    Eigen::MatrixXcd lower = (Q - ll * eye).partialPivLu().solve(eye);
    if (!lower.allFinite()) throw NumericalError("contour node hit the spectrum");
    return upper - rule.w[k] * std::exp(-t * ll) * down * lower;
  };

  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (rule.s.size() + kChunk - 1) / kChunk;
  std::vector<Eigen::MatrixXcd> partial(chunks, Eigen::MatrixXcd::Zero(n, n));
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(rule.s.size(), (c + 1) * kChunk);
    for (std::size_t k = c * kChunk; k < end; ++k) partial[c] += node(k);
  });
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& p : partial) sum += p;
  return sum / (2.0 * M_PI * kI);
}

Eigen::MatrixXcd dunford_heat(const DiscretizedOperator& Q, double t, const ContourQuadrature& quad) {
  return dunford_heat(Q.hermitian_part, t, quad);
}

Eigen::MatrixXcd eig_heat(const Eigen::MatrixXcd& Q, double t) {
  if (is_hermitian(Q, 1e-14)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q);
    const Eigen::VectorXd decay = (-t * es.eigenvalues().array()).exp();
    return es.eigenvectors() * decay.asDiagonal() * es.eigenvectors().adjoint();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q);
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Eigen::VectorXcd decay = (-t * es.eigenvalues().array()).exp();
  const Eigen::MatrixXcd& V = es.eigenvectors();
  return V * decay.asDiagonal() * V.partialPivLu().inverse();
}

HilleYosida hille_yosida(const Eigen::MatrixXcd& Q, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("Hille–Yosida parameter must be positive");
  const Eigen::Index n = Q.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd resolvent = (Q + lambda * eye).partialPivLu().inverse();
  HilleYosida hy;
  hy.value = lambda * eye - lambda * lambda * resolvent;
  hy.form_discrepancy = spectral_norm(hy.value - lambda * Q * resolvent);
  return hy;
}

Eigen::MatrixXcd hy_heat(const Eigen::MatrixXcd& Q, double lambda, double t) {
  const Eigen::MatrixXcd scaled = -t * hille_yosida(Q, lambda).value;
  return scaled.exp();
}

std::vector<complex> contour_samples(int per_ray, double s_max) {
  if (per_ray < 1 || !(s_max > 0.0)) throw DomainError("contour sampling needs nodes and a positive length");
  std::vector<complex> out;
  for (int k = 1; k <= per_ray; ++k) {
    const double s = s_max * k / per_ray;
    out.push_back(-1.0 + s * complex(1.0, 1.0));
    out.push_back(-1.0 + s * complex(1.0, -1.0));
  }
  return out;
}

double resolvent_bound_check(const Eigen::MatrixXcd& Q, const std::vector<complex>& samples) {
  if (samples.empty()) throw DomainError("resolvent bound needs at least one sample");
  const Eigen::Index n = Q.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
  double c = 0.0;
  for (const complex lambda : samples) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Q - lambda * eye);
    const double smallest = svd.singularValues()(n - 1);
    if (smallest <= 1e-14 * std::max(1.0, svd.singularValues()(0)))
      throw NumericalError("resolvent sample lies on the spectrum");
    c = std::max(c, (1.0 + std::abs(lambda.imag())) / smallest);
  }
  return c;
}

}  // namespace volterra
