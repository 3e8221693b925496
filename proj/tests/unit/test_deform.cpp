#include <gtest/gtest.h>

#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "test_support.hpp"

using namespace volterra;
using namespace volterra::test;

constexpr double kInf = std::numeric_limits<double>::infinity();

namespace {

ParabolicSymbol cos_parametrix(int depth) {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = TrigPolynomial::cosine(1, 0, 1, 1.0);
  return parametrix(operator_symbol(op), depth).symbol;
}

ParabolicSymbol heat_symbol(const FormPtr& f) { return ParabolicSymbol::i_tau(f) + ParabolicSymbol::quadratic(f, *f); }

}  // namespace

TEST(RescaleSymbol, HeatSymbolScalesByHbarSquared) {
  const auto f = flat(1);
  const auto q = heat_symbol(f);
  const auto r = rescale_symbol(q, 0.5);
  EXPECT_TRUE(approx_equal(r, 0.25 * q, 1e-15));
  const Xi xi{1.7, 0.0};
  const complex tau(0.4, -0.9);
  EXPECT_NEAR(std::abs(eval(r, {}, xi, tau) - (complex(0, 1) * tau + xi[0] * xi[0]) / 4.0), 0.0, 1e-15);
}

TEST(RescaleSymbol, ZeroIsPrincipalPart) {
  const auto q = cos_parametrix(2);
  EXPECT_TRUE(approx_equal(rescale_symbol(q, 0.0), principal_part(q), 0.0));
  EXPECT_THROW(rescale_symbol(q, 1.5), DomainError);
}

TEST(ModelApproximant, ConvergesLinearly) {
  std::mt19937_64 rng(3);
  const auto f = perturbed_1d();
  ParabolicSymbol q(f, -2);
  q.add_term(TrigPolynomial::constant(1, 1.0), {}, -1);
  q.add_term(TrigPolynomial::sine(1, 0, 1, 0.7), {1, 0}, -2);
  q.add_term(TrigPolynomial::cosine(1, 0, 2, 0.4), {}, -2);
  const auto model = principal_part(q);
  const auto s = random_sample(rng, 1);
  double previous = 0.0;
  for (double h : {1e-3, 5e-4, 2.5e-4}) {
    const double gap = std::abs(eval(model_approximant(q, h), s.x, s.xi, s.tau) - eval(model, s.x, s.xi, s.tau));
    if (previous > 0.0) EXPECT_NEAR(previous / gap, 2.0, 1e-2) << h;
    previous = gap;
  }
  EXPECT_TRUE(approx_equal(model_approximant(q, 1.0), q, 0.0));
}

TEST(RescaleKernel, FlatHeatKernel) {
  const auto k = causal_kernel(ParabolicSymbol::resolvent_power(flat(1), -1));
  const auto r = rescale_kernel(k, 0.5);
  const std::array<double, 1> zeta{0.5};
  EXPECT_NEAR(std::abs(r.spatial({}, zeta, 0.2) - 16.0 * k.spatial({}, zeta, 0.2)), 0.0,
              1e-12 * std::abs(r.spatial({}, zeta, 0.2)));
  const auto same = rescale_kernel(k, 1.0);
  EXPECT_EQ(same.spatial({}, zeta, 0.2), k.spatial({}, zeta, 0.2));
  EXPECT_THROW(rescale_kernel(k, 0.0), DomainError);
}

TEST(RescaleKernel, MatchesDefinitionForVariableForm) {
  const auto q = cos_parametrix(2);
  const auto k = causal_kernel(q);
  const double h = 0.3;
  const auto r = rescale_kernel(k, h);
  const Point x{0.9, 0.0};
  for (double z : {-0.4, 0.0, 0.8})
    for (double t : {0.3, 1.1}) {
      const std::array<double, 1> zeta{z}, scaled{h * z};
      const complex expected = std::pow(h, -3.0) * k.spatial(x, scaled, h * h * t);
      EXPECT_NEAR(std::abs(r.spatial(x, zeta, t) - expected), 0.0, 1e-12 * std::abs(expected));
    }
}

TEST(RescaleCutoff, PreservesMass) {
  using boost::math::quadrature::gauss_kronrod;
  const Cutoff chi = [](std::span<const double> z, double t) {
    return std::exp(-z[0] * z[0] - (t - 1.0) * (t - 1.0));
  };
  auto mass = [](const Cutoff& c) {
    return gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          return gauss_kronrod<double, 61>::integrate(
              [&](double z) { return c(std::span<const double>(&z, 1), t); }, -kInf, kInf, 15, 1e-12);
        },
        -kInf, kInf, 15, 1e-12);
  };
  const double base = mass(chi);
  for (double eps : {0.5, 2.0}) EXPECT_NEAR(mass(rescale_cutoff(chi, eps, 1)) / base, 1.0, 1e-8) << eps;
  EXPECT_THROW(rescale_cutoff(chi, 0.0, 1), DomainError);
}

TEST(HomogeneityDefect, VanishesForPrincipalPieceAndUnitLambda) {
  const auto q = cos_parametrix(2);
  const ScaledFamily leading(principal_part(q));
  const auto samples = default_kernel_samples(1);
  EXPECT_LE(homogeneity_defect(leading, 3.0, samples).sup, 1e-14);
  const ScaledFamily full(q);
  const double at_one = homogeneity_defect(full, 1.0, samples).sup;
  // At λ = 1 the defect is the subleading kernel itself.
  const auto rest = causal_kernel(q - principal_part(q));
  double sup = 0.0;
  for (const auto& s : samples) sup = std::max(sup, std::abs(rest.spatial(s.x, s.zeta, s.t)));
  EXPECT_NEAR(at_one, sup, 1e-14);
}

TEST(HomogeneityDefect, CosineFamilyDecaysQuadratically) {
  // q_{−3} vanishes for −∂² + cos x, so the defect is carried by q_{−4} alone.
  const ScaledFamily family(cos_parametrix(2));
  const auto samples = default_kernel_samples(1);
  const double a = homogeneity_defect(family, 2.0, samples).sup;
  const double b = homogeneity_defect(family, 4.0, samples).sup;
  EXPECT_NEAR(b / a, 0.25, 1e-10);
  EXPECT_LE(homogeneity_defect(ScaledFamily(cos_parametrix(1)), 2.0, samples).sup, 1e-14);
}

TEST(MeasureScaling, Jacobian) {
  EXPECT_NEAR(measure_scaling_check(2.0, 1), 8.0, 1e-12);
  EXPECT_NEAR(measure_scaling_check(3.0, 2), 81.0, 1e-12);
  EXPECT_THROW(measure_scaling_check(-1.0, 1), DomainError);
}

TEST(Filtration, HomogeneousDimension) {
  for (int d = 1; d <= 2; ++d) {
    Filtration f{d};
    EXPECT_EQ(f.homogeneous_dimension(), d + 2);
    EXPECT_EQ(f.subspace_dims()[1], d + 1);
  }
}
