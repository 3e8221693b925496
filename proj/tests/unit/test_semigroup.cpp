#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "volterra_app/oracles.hpp"

using namespace volterra;

namespace {

Eigen::MatrixXcd diag(std::initializer_list<double> values) {
  Eigen::VectorXcd v(Eigen::Index(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v.asDiagonal();
}

OperatorSpec cos_op() {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = TrigPolynomial::cosine(1, 0, 1, 1.0);
  return op;
}

}  // namespace

TEST(Discretize, FlatSpectrum) {
  const auto D = discretize(OperatorSpec::laplacian(1), 4);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D.matrix);
  const std::vector<double> expected{0, 1, 1, 4, 4, 9, 9, 16, 16};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(es.eigenvalues()[Eigen::Index(i)], expected[i], 1e-13);
  EXPECT_TRUE(D.diagonal);
  EXPECT_THROW(discretize(OperatorSpec::laplacian(1), 3), DomainError);
}

TEST(Discretize, ConstantShift) {
  OperatorSpec op = OperatorSpec::laplacian(2);
  op.potential = TrigPolynomial::constant(2, 2.5);
  const auto D = discretize(op, 4);
  const auto F = discretize(OperatorSpec::laplacian(2), 4);
  EXPECT_NEAR((D.matrix - F.matrix - 2.5 * Eigen::MatrixXcd::Identity(D.size(), D.size())).norm(), 0.0, 1e-14);
}

TEST(Discretize, CosineStencil) {
  const auto D = discretize(cos_op(), 8);
  EXPECT_TRUE(D.self_adjoint);
  for (Eigen::Index i = 0; i + 1 < D.size(); ++i) {
    EXPECT_NEAR(std::abs(D.matrix(i, i + 1) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(D.matrix(i + 1, i) - 0.5), 0.0, 1e-15);
    if (i + 2 < D.size()) EXPECT_EQ(D.matrix(i, i + 2), complex(0.0));
  }
}

TEST(Discretize, MatchesPlaneWaveApplication) {
  std::mt19937_64 rng(5);
  const auto op = app::random_operator(rng, 1, 2);
  const auto D = discretize(op, 6);
  const auto A = app::DiffOperator::from_spec(op);
  // ⟨e_k, A e_l⟩ = Fourier coefficient k−l of e^{−ilx} A e^{ilx}.
  const int l = 2;
  std::vector<complex> samples;
  for (const auto& x : uniform_grid(1, 16)) samples.push_back(A.apply_to_plane_wave(x, std::array<double, 1>{double(l)}));
  const auto symbol = interpolate_on_grid(1, 16, samples, 0.0);
  for (Eigen::Index r = 0; r < D.size(); ++r) {
    const int k = D.basis[std::size_t(r)][0];
    const Eigen::Index c = l + 6;
    EXPECT_NEAR(std::abs(D.matrix(r, c) - symbol.coefficient({k - l, 0})), 0.0, 1e-12);
  }
}

TEST(Dunford, KnownValues) {
  EXPECT_NEAR(std::abs(dunford_heat(diag({0.0}), 0.7)(0, 0) - 1.0), 0.0, 1e-12);
  const auto E = dunford_heat(diag({1.0, 4.0}), 0.5);
  EXPECT_NEAR(std::abs(E(0, 0) - std::exp(-0.5)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(E(1, 1) - std::exp(-2.0)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(E(0, 1)), 0.0, 1e-12);
}

TEST(Dunford, MatchesEigendecompositionOnRandomPsd) {
  std::mt19937_64 rng(7);
  const auto Q = app::random_hermitian_psd(rng, 20, 10.0);
  for (double t : {0.01, 0.1, 1.0, 10.0}) EXPECT_LE(spectral_norm(dunford_heat(Q, t) - eig_heat(Q, t)), 1e-8) << t;
  EXPECT_LE(spectral_norm(dunford_heat(Q, 0.3) * dunford_heat(Q, 0.7) - dunford_heat(Q, 1.0)), 1e-8);
}

TEST(Dunford, NonNormalMatrix) {
  Eigen::MatrixXcd Q(2, 2);
  Q << 1.0, 3.0, 0.0, 2.0;
  // e^{−tQ} for upper-triangular Q, computed by hand.
  const double t = 0.4;
  const complex off = 3.0 * (std::exp(-t) - std::exp(-2 * t)) / (1.0 - 2.0);
  const auto E = dunford_heat(Q, t);
  EXPECT_NEAR(std::abs(E(0, 0) - std::exp(-t)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(E(0, 1) - off), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(E(1, 1) - std::exp(-2 * t)), 0.0, 1e-10);
}

TEST(Dunford, CorpusOperatorAgreesWithEig) {
  const auto D = discretize(cos_op(), 16);
  for (double t : {0.01, 1.0, 10.0})
    EXPECT_LE(spectral_norm(dunford_heat(D, t) - eig_heat(D.hermitian_part, t)), 1e-8) << t;
}

TEST(Dunford, RejectsNonPositiveTime) { EXPECT_THROW(dunford_heat(diag({1.0}), 0.0), DomainError); }

TEST(ContourQuadrature, RuleIntegratesPolynomialWeight) {
  const ContourQuadrature quad;
  const auto rule = quad.rule(0.5, 20.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.s.size(); ++i) sum += rule.w[i];
  EXPECT_NEAR(sum, ContourQuadrature::s_max(0.5), 1e-10);
  EXPECT_DOUBLE_EQ(ContourQuadrature::s_max(0.5), 80.0);
  EXPECT_DOUBLE_EQ(ContourQuadrature::s_max(10.0), 40.0);
}

TEST(HilleYosida, KnownValues) {
  const auto hy = hille_yosida(diag({1.0}), 1.0);
  EXPECT_NEAR(std::abs(hy.value(0, 0) - 0.5), 0.0, 1e-15);
  const auto Q = diag({1.0, 4.0});
  EXPECT_LE(spectral_norm(hy_heat(Q, 1e4, 1.0) - eig_heat(Q, 1.0)), 1e-3);
}

TEST(HilleYosida, ScalarFormula) {
  const auto Q = diag({0.5, 3.0, 9.0});
  for (double lambda : {1.0, 10.0, 100.0}) {
    const auto hy = hille_yosida(Q, lambda);
    for (Eigen::Index i = 0; i < 3; ++i) {
      const double q = std::abs(Q(i, i));
      EXPECT_NEAR(std::abs(hy.value(i, i) - lambda * q / (q + lambda)), 0.0, 1e-12);
    }
    EXPECT_LE(hy.form_discrepancy, 1e-12 * lambda);
  }
}

TEST(HilleYosida, ContractiveAndConvergent) {
  std::mt19937_64 rng(13);
  const auto Q = app::random_hermitian_psd(rng, 12, 30.0);
  const auto E = eig_heat(Q, 1.0);
  double previous = 1e300;
  for (double lambda : {10.0, 100.0, 1000.0, 10000.0}) {
    const double err = spectral_norm(hy_heat(Q, lambda, 1.0) - E);
    EXPECT_LT(err, previous);
    previous = err;
    for (double t : {0.1, 1.0, 10.0}) EXPECT_LE(spectral_norm(hy_heat(Q, lambda, t)), 1.0 + 1e-10);
  }
  EXPECT_THROW(hille_yosida(Q, 0.0), DomainError);
}

TEST(ResolventBound, KnownValues) {
  const double c = resolvent_bound_check(diag({0.0}), {complex(-1.0, 0.0) + complex(1.0, 1.0)});
  EXPECT_NEAR(c, 2.0, 1e-14);
  EXPECT_THROW(resolvent_bound_check(diag({0.0}), {}), DomainError);
  EXPECT_THROW(resolvent_bound_check(diag({2.0}), {complex(2.0, 0.0)}), NumericalError);
}

TEST(ResolventBound, StableUnderRefinement) {
  Eigen::VectorXcd v(10);
  for (int i = 0; i < 10; ++i) v[i] = double(i);
  const Eigen::MatrixXcd Q = v.asDiagonal();
  // Nested samplings: the finer one contains every coarse node.
  const double coarse = resolvent_bound_check(Q, contour_samples(200, 40.0));
  const double fine = resolvent_bound_check(Q, contour_samples(800, 40.0));
  EXPECT_TRUE(std::isfinite(coarse));
  EXPECT_GE(fine, coarse);
  EXPECT_NEAR(coarse / fine, 1.0, 0.05);
  // (1+s)/dist(−1+s(1±i), spectrum) stays below 2√2 for this spectrum.
  EXPECT_LE(fine, 2.0 * std::sqrt(2.0) + 1e-12);
}
