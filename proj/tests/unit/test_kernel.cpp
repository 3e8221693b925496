#include <gtest/gtest.h>

#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "test_support.hpp"

using namespace volterra;
using namespace volterra::test;
using boost::math::quadrature::gauss_kronrod;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double integrate(const std::function<double(double)>& f, double a = -kInf, double b = kInf) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

CausalKernel kernel_of(const FormPtr& f, const TrigPolynomial& c, MultiIndex beta, int lpow) {
  return causal_kernel(f, SymbolTerm{c, beta, lpow});
}

}  // namespace

TEST(CausalKernel, KnownValues) {
  const auto f = flat(1);
  const auto one = TrigPolynomial::constant(1, 1.0);
  const auto k1 = kernel_of(f, one, {}, -1);
  const auto k2 = kernel_of(f, one, {}, -2);
  const Xi xi{1.3, 0.0};
  for (double t : {0.1, 1.0, 2.5}) {
    EXPECT_NEAR(std::abs(k1.mixed({}, xi, t) - std::exp(-t * 1.69)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(k2.mixed({}, xi, t) - t * std::exp(-t * 1.69)), 0.0, 1e-15);
  }
  EXPECT_EQ(k1.mixed({}, xi, -0.5), complex(0.0));
  EXPECT_EQ(k2.mixed({}, xi, -0.5), complex(0.0));
  EXPECT_EQ(k2.spatial({}, std::array<double, 1>{0.2}, -0.5), complex(0.0));
}

TEST(CausalKernel, RejectsNonNegativePower) {
  EXPECT_THROW(kernel_of(flat(1), TrigPolynomial::constant(1, 1.0), {}, 0), DomainError);
}

TEST(CausalKernel, MixedMatchesInverseTauIntegral) {
  // (1/2π)∫ e^{itτ} ξ Λ^{−3} dτ by quadrature, Λ = iτ + g ξ².
  const auto g = perturbed_1d();
  const auto k = kernel_of(g, TrigPolynomial::cosine(1, 0, 1, 1.0), {1, 0}, -3);
  const double x = 0.8, xi = 0.9;
  const double a = (1.0 + 0.5 * std::cos(x)) * xi * xi;
  for (double t : {0.3, 1.2}) {
    auto integrand = [&](double tau, bool imag) {
      const complex v = std::cos(x) * xi * std::polar(1.0, t * tau) / std::pow(complex(a, tau), 3);
      return imag ? v.imag() : v.real();
    };
    const double re = integrate([&](double tau) { return integrand(tau, false); }) / (2 * M_PI);
    const double im = integrate([&](double tau) { return integrand(tau, true); }) / (2 * M_PI);
    EXPECT_NEAR(std::abs(k.mixed({x, 0.0}, Xi{xi, 0.0}, t) - complex(re, im)), 0.0, 1e-9) << "t=" << t;
  }
}

TEST(CausalKernel, SpatialMatchesXiIntegral) {
  const auto g = perturbed_1d();
  const auto k = kernel_of(g, TrigPolynomial::cosine(1, 0, 1, 1.0), {2, 0}, -2);
  const Point x{0.8, 0.0};
  for (double zeta : {0.0, 0.7}) {
    for (double t : {0.25, 1.5}) {
      auto part = [&](double xi, bool imag) {
        const complex v = std::polar(1.0, zeta * xi) * k.mixed(x, Xi{xi, 0.0}, t);
        return imag ? v.imag() : v.real();
      };
      const complex oracle(integrate([&](double xi) { return part(xi, false); }),
                           integrate([&](double xi) { return part(xi, true); }));
      EXPECT_NEAR(std::abs(k.spatial(x, std::array<double, 1>{zeta}, t) - oracle / (2 * M_PI)), 0.0, 1e-11);
    }
  }
}

TEST(CausalKernel, FlatHeatKernelInTwoDimensions) {
  const auto k = causal_kernel(ParabolicSymbol::resolvent_power(flat(2), -1));
  const std::array<double, 2> zeta{0.3, -0.5};
  const double t = 0.7;
  const double expected = std::exp(-(0.09 + 0.25) / (4 * t)) / (4 * M_PI * t);
  EXPECT_NEAR(k.spatial({}, zeta, t).real(), expected, 1e-15);
  EXPECT_NEAR(k.diagonal({}, t).real(), 1.0 / (4 * M_PI * t), 1e-15);
}

TEST(CausalKernel, RoundTripsToSymbol) {
  ParabolicSymbol q(perturbed_1d(), -2);
  q.add_term(TrigPolynomial::constant(1, 1.0), {}, -1);
  q.add_term(TrigPolynomial::sine(1, 0, 1, 0.4), {1, 0}, -2);
  q.add_term(TrigPolynomial::cosine(1, 0, 2, -0.2), {2, 0}, -4);
  EXPECT_TRUE(approx_equal(causal_kernel(q).to_symbol(), q, 1e-15));
}

TEST(CausalKernel, DiagonalScalingIdentity) {
  OperatorSpec op = OperatorSpec::divergence_form(1, *perturbed_1d(), TrigPolynomial::cosine(1, 0, 1, 1.0));
  const auto q = parametrix(operator_symbol(op), 3).symbol;
  for (int s : q.degrees()) {
    const int j = -2 - s;
    const auto k = causal_kernel(q.graded_piece(s));
    const Point x{1.1, 0.0};
    const complex base = k.diagonal(x, 1.0);
    for (double t : {0.25, 4.0}) {
      const complex scaled = std::pow(t, 0.5 * (j - 1)) * base;
      EXPECT_LE(std::abs(k.diagonal(x, t) - scaled), 1e-10 * std::max(1e-300, std::abs(scaled)) + 1e-300)
          << "degree " << s;
    }
  }
}

TEST(MinExtensionIndex, KnownValues) {
  EXPECT_EQ(min_extension_index(-2, 1), 0);
  EXPECT_EQ(min_extension_index(-6, 1), 2);
  EXPECT_EQ(min_extension_index(0, 3), 0);
}

TEST(MinExtensionIndex, ExhaustiveInequality) {
  for (int d = 1; d <= 3; ++d)
    for (int m = -10; m <= 4; ++m) {
      const int j = min_extension_index(m, d);
      EXPECT_GT(m + 2 * j, -(d + 2));
      if (j > 0) EXPECT_LE(m + 2 * (j - 1), -(d + 2));
    }
  EXPECT_THROW(min_extension_index(-2, 0), DomainError);
}

TEST(ResidualKernel, CausalAndDecaying) {
  ParabolicSymbol q(flat(1), -4);
  q.add_term(TrigPolynomial::cosine(1, 0, 1, 1.0), {}, -2);
  const auto r = residual_kernel(q, {0.4, 0.0}, 33, 12.0, 41, 4.0);
  EXPECT_TRUE(r.causal_support);
  EXPECT_LT(r.decay_ratio, 1e-3);
  EXPECT_EQ(r.values.size(), r.t.size() * r.zeta.size());
}
