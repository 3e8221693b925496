#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace volterra;

namespace {

const double kInvSqrt4Pi = 1.0 / std::sqrt(4.0 * M_PI);

OperatorSpec with_potential(TrigPolynomial v) {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = std::move(v);
  return op;
}

}  // namespace

TEST(HeatCoefficients, FlatLaplacian) {
  const auto h = heat_coefficients(OperatorSpec::laplacian(1), 4);
  ASSERT_EQ(h.terms.size(), 5u);
  EXPECT_TRUE(h.q(0).is_constant());
  EXPECT_NEAR(h.q(0).coefficient({0, 0}).real(), kInvSqrt4Pi, 1e-15);
  for (int j = 1; j <= 4; ++j) EXPECT_TRUE(h.q(j).is_zero()) << j;
  EXPECT_DOUBLE_EQ(h.terms[3].exponent, 1.0);
  EXPECT_TRUE(h.log_coefficient.is_zero());
}

TEST(HeatCoefficients, FlatLaplacianTwoDimensions) {
  const auto h = heat_coefficients(OperatorSpec::laplacian(2), 2);
  EXPECT_NEAR(h.q(0).coefficient({0, 0}).real(), 1.0 / (4.0 * M_PI), 1e-15);
  EXPECT_TRUE(h.q(1).is_zero());
  EXPECT_TRUE(h.q(2).is_zero());
}

TEST(HeatCoefficients, CosinePotential) {
  const auto h = heat_coefficients(with_potential(TrigPolynomial::cosine(1, 0, 1, 1.0)), 4);
  EXPECT_TRUE(h.q(1).is_zero());
  EXPECT_TRUE(approx_equal(h.q(2), TrigPolynomial::cosine(1, 0, 1, -kInvSqrt4Pi), 1e-14));
  EXPECT_TRUE(h.q(3).is_zero());
}

TEST(HeatCoefficients, ConstantCoefficientsMatchExplicitDiagonal) {
  // −a∂² + b∂ + c has diagonal (4πat)^{−1/2} e^{−t(c + b²/4a)}.
  OperatorSpec op(1, "constant");
  const double a = 1.7, b = 0.6, c = 0.9;
  op.metric.set_entry(0, 0, TrigPolynomial::constant(1, a));
  op.drift[0] = TrigPolynomial::constant(1, b);
  op.potential = TrigPolynomial::constant(1, c);
  const auto h = heat_coefficients(op, 6);
  const double rate = c + b * b / (4 * a);
  double factorial = 1.0;
  for (int j = 0; j <= 6; ++j) {
    if (j % 2 == 1) {
      EXPECT_TRUE(h.q(j).is_zero()) << j;
      continue;
    }
    const int k = j / 2;
    if (k > 0) factorial *= k;
    const double expected = std::pow(-rate, k) / factorial / std::sqrt(4 * M_PI * a);
    EXPECT_NEAR(h.q(j).coefficient({0, 0}).real(), expected, 1e-13) << j;
  }
}

TEST(HeatCoefficients, OddIndicesVanishForVariableMetric) {
  QuadraticForm g(1);
  g.set_entry(0, 0, TrigPolynomial::constant(1, 1.0) + TrigPolynomial::cosine(1, 0, 1, 0.5));
  const auto op = OperatorSpec::divergence_form(1, g, TrigPolynomial::sine(1, 0, 2, 0.3));
  const auto h = heat_coefficients(op, 5);
  for (int j : {1, 3, 5}) EXPECT_LT(h.q(j).max_abs(), 1e-13) << j;
  EXPECT_FALSE(h.q(2).is_zero());
}

TEST(HeatCoefficients, EvaluateSumsPowers) {
  const auto h = heat_coefficients(with_potential(TrigPolynomial::constant(1, 1.0)), 4);
  const double t = 0.01;
  // e^{−t}(4πt)^{−1/2} to O(t^{5/2})
  EXPECT_NEAR(h.evaluate({}, t), std::exp(-t) / std::sqrt(4 * M_PI * t), 1e-6);
}

TEST(HeatCoefficients, RejectsOutOfRangeJ) {
  EXPECT_THROW(heat_coefficients(OperatorSpec::laplacian(1), 9), DomainError);
  EXPECT_THROW(heat_coefficients(OperatorSpec::laplacian(1), -1), DomainError);
}
