#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace volterra;

namespace {

const double kInvSqrt4Pi = 1.0 / std::sqrt(4.0 * M_PI);

OperatorSpec shifted(TrigPolynomial v) {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = std::move(v);
  return op;
}

}  // namespace

TEST(GeometricTimes, EndpointsAndRatio) {
  const auto t = geometric_times(1e-3, 1e-1, 5);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_DOUBLE_EQ(t.front(), 1e-3);
  EXPECT_NEAR(t.back(), 1e-1, 1e-15);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_NEAR(t[i] / t[i - 1], std::sqrt(10.0), 1e-12);
  EXPECT_THROW(geometric_times(0.0, 1.0, 5), DomainError);
  EXPECT_THROW(geometric_times(1e-3, 1e-1, 1), DomainError);
}

TEST(ResolvedModes, MetricFloorRaisesCutoff) {
  EXPECT_EQ(resolved_modes(0.3), 10);
  EXPECT_GT(resolved_modes(0.3, 0.5), resolved_modes(0.3));
  EXPECT_THROW(resolved_modes(0.0), DomainError);
}

TEST(HeatDiagonal, FlatMatchesThetaSeries) {
  const auto D = discretize(OperatorSpec::laplacian(1), 40);
  const auto diag = heat_diagonal(D, {Point{0.3, 0.0}}, {0.05, 0.5});
  for (int c = 0; c < 2; ++c) {
    const double t = c == 0 ? 0.05 : 0.5;
    double theta = 0.0;
    for (int k = -40; k <= 40; ++k) theta += std::exp(-t * k * k);
    EXPECT_NEAR(diag(0, c), theta / (2 * M_PI), 1e-13);
  }
}

TEST(FitDiagonal, FlatLeadingCoefficient) {
  const auto fit = fit_diagonal_expansion(OperatorSpec::laplacian(1), geometric_times(0.005, 0.05, 20), 2, false, 8);
  for (std::size_t p = 0; p < fit.points.size(); ++p) {
    EXPECT_NEAR(fit.coefficient(p, 0), kInvSqrt4Pi, 1e-6);
    EXPECT_NEAR(fit.coefficient(p, 2), 0.0, 1e-4);
  }
}

TEST(FitDiagonal, ConstantPotentialSecondCoefficient) {
  const auto fit =
      fit_diagonal_expansion(shifted(TrigPolynomial::constant(1, 1.0)), geometric_times(0.005, 0.05, 20), 4, false, 8);
  for (std::size_t p = 0; p < fit.points.size(); ++p) EXPECT_NEAR(fit.coefficient(p, 2), -kInvSqrt4Pi, 1e-3);
}

TEST(FitDiagonal, CosineMatchesSymbolicCoefficients) {
  const auto op = shifted(TrigPolynomial::cosine(1, 0, 1, 1.0));
  const auto fit = fit_diagonal_expansion(op, geometric_times(0.005, 0.05, 24), 4, false, 8);
  const auto h = heat_coefficients(op, 4);
  for (std::size_t p = 0; p < fit.points.size(); ++p) {
    EXPECT_NEAR(fit.coefficient(p, 0), h.q(0)(fit.points[p]).real(), 1e-5);
    EXPECT_NEAR(fit.coefficient(p, 2), h.q(2)(fit.points[p]).real(), 1e-2);
  }
}

TEST(FitDiagonal, LogColumnVanishes) {
  const auto op = shifted(TrigPolynomial::cosine(1, 0, 1, 1.0));
  const auto fit = fit_diagonal_expansion(op, geometric_times(3e-5, 3e-4, 20), 2, true, 8);
  EXPECT_EQ(fit.log_coefficient.size(), fit.points.size());
  EXPECT_LE(fit.max_abs_log(), 1e-3);
}

TEST(FitDiagonal, Preconditions) {
  const auto op = OperatorSpec::laplacian(1);
  EXPECT_THROW(fit_diagonal_expansion(op, geometric_times(0.01, 0.05, 3), 2, false), DomainError);
  EXPECT_THROW(fit_diagonal_expansion(op, geometric_times(0.01, 0.9, 20), 2, false), DomainError);
  EXPECT_THROW(fit_diagonal_expansion(op, geometric_times(0.01, 0.05, 20), 2, false, 8, 5), DomainError);
  EXPECT_THROW(fit_diagonal_expansion(op, geometric_times(0.01, 0.05, 20), -1, false), DomainError);
}
