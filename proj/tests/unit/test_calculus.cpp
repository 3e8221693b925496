#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "volterra_app/oracles.hpp"

using namespace volterra;
using namespace volterra::test;

namespace {

OperatorSpec cos_op() {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = TrigPolynomial::cosine(1, 0, 1, 1.0);
  return op;
}

OperatorSpec perturbed_op() {
  QuadraticForm g(1);
  g.set_entry(0, 0, TrigPolynomial::constant(1, 1.0) + TrigPolynomial::cosine(1, 0, 1, 0.5));
  return OperatorSpec::divergence_form(1, g, TrigPolynomial::cosine(1, 0, 2, 0.3));
}

/// (iτ + A)[q(·,ξ,τ) e^{i(·−x)ξ}](x) on T^1 by fourth-order central differences.
complex apply_heat_operator(const OperatorSpec& op, const ParabolicSymbol& q, double x, double xi, complex tau) {
  const double h = 2e-3;
  auto f = [&](double y) { return eval(q, {y, 0.0}, {xi, 0.0}, tau) * std::polar(1.0, (y - x) * xi); };
  const complex f0 = f(x), fp1 = f(x + h), fm1 = f(x - h), fp2 = f(x + 2 * h), fm2 = f(x - 2 * h);
  const complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  const Point p{x, 0.0};
  return complex(0, 1) * tau * f0 - op.metric.entry(0, 0)(p) * d2 + op.drift[0](p) * d1 + op.potential(p) * f0;
}

}  // namespace

TEST(OperatorSymbol, KnownValues) {
  const auto flat_op = OperatorSpec::laplacian(1);
  const auto p = operator_symbol(flat_op);
  const auto f = p.form();
  EXPECT_EQ(p, ParabolicSymbol::i_tau(f) + ParabolicSymbol::quadratic(f, *f));
  EXPECT_EQ(p, ParabolicSymbol::resolvent_power(f, 1));

  const auto pc = operator_symbol(cos_op());
  EXPECT_EQ(pc, ParabolicSymbol::resolvent_power(pc.form(), 1) +
                    ParabolicSymbol::from_term(pc.form(), {TrigPolynomial::cosine(1, 0, 1, 1.0), {}, 0}));
}

TEST(OperatorSymbol, PlaneWaveOracle) {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.drift[0] = TrigPolynomial::constant(1, 2.0);
  const auto diff = app::DiffOperator::from_spec(op);
  const auto sp = spatial_symbol(op, reference_form(op));
  const Point x{0.4, 0.0};
  const Xi xi{3.0, 0.0};
  EXPECT_LT(rel_err(eval(sp, x, xi, complex(0, -1)), diff.apply_to_plane_wave(x, xi)), 1e-10);
  // e^{−ixξ}(−∂² + 2∂)e^{ixξ} = ξ² + 2iξ
  EXPECT_LT(rel_err(diff.apply_to_plane_wave(x, xi), complex(9.0, 6.0)), 1e-14);
}

TEST(SharpProduct, ConstantCoefficientsReduceToProduct) {
  const auto f = flat(1);
  const auto a = ParabolicSymbol::resolvent_power(f, 1) + ParabolicSymbol::constant(f, 2.0);
  const auto b = ParabolicSymbol::resolvent_power(f, -2);
  EXPECT_TRUE(approx_equal(sharp_product(a, b, 4), symbol_mul(a, b), 0.0));
  EXPECT_EQ(sharp_product(a, b, 4).floor(), std::optional<int>(-5));
}

TEST(SharpProduct, XiTimesExponential) {
  const auto f = flat(1);
  const auto xi = ParabolicSymbol::from_term(f, {TrigPolynomial::constant(1, 1.0), {1, 0}, 0});
  const auto e = ParabolicSymbol::from_term(f, {TrigPolynomial::monomial(1, {1, 0}, 1.0), {}, 0});
  // (−i∂)∘e^{ix} has left symbol e^{ix}(ξ + 1)
  const auto expected = symbol_mul(e, xi) + e;
  EXPECT_EQ(sharp_product_exact(xi, e), expected);
  EXPECT_TRUE(approx_equal(sharp_product(xi, e, 3), expected, 0.0));
}

TEST(SharpProduct, PotentialTimesInverse) {
  const auto p = operator_symbol(cos_op());
  const auto inv = ParabolicSymbol::resolvent_power(p.form(), -1);
  const auto expected = ParabolicSymbol::one(p.form()) +
                        ParabolicSymbol::from_term(p.form(), {TrigPolynomial::cosine(1, 0, 1, 1.0), {}, -1});
  EXPECT_TRUE(approx_equal(sharp_product_exact(p, inv), expected, 1e-15));
}

TEST(SharpProduct, RandomDifferentialOperatorsMatchLeibnizComposition) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = trial < 3 ? 1 : 2;
    const auto a1 = app::random_operator(rng, dim, 3);
    const auto a2 = app::random_operator(rng, dim, 3);
    const auto form = reference_form(a1);
    const auto s1 = spatial_symbol(a1, form);
    const auto s2 = spatial_symbol(a2, form);
    const auto composed =
        compose(app::DiffOperator::from_spec(a1), app::DiffOperator::from_spec(a2)).symbol(form);
    // Order 2 + 2: depth 5 keeps every degree down to 0.
    EXPECT_TRUE(approx_equal(sharp_product(s1, s2, 5), composed, 1e-12)) << "trial " << trial;
    EXPECT_TRUE(approx_equal(sharp_product_exact(s1, s2), composed, 1e-12)) << "trial " << trial;
  }
}

TEST(SharpProduct, ComposedPlaneWaveAgreesPointwise) {
  std::mt19937_64 rng(43);
  const auto a1 = app::random_operator(rng, 2, 2);
  const auto a2 = app::random_operator(rng, 2, 2);
  const auto form = reference_form(a1);
  const auto sharp = sharp_product(spatial_symbol(a1, form), spatial_symbol(a2, form), 5);
  const auto composed = compose(app::DiffOperator::from_spec(a1), app::DiffOperator::from_spec(a2));
  for (int i = 0; i < 5; ++i) {
    const auto s = random_sample(rng, 2);
    EXPECT_LT(rel_err(eval(sharp, s.x, s.xi, complex(0, -1)), composed.apply_to_plane_wave(s.x, s.xi)), 1e-11);
  }
}

TEST(Parametrix, FlatIsExactInverse) {
  const auto p = operator_symbol(OperatorSpec::laplacian(1));
  for (int N : {0, 1, 3, 5}) {
    const auto par = parametrix(p, N);
    EXPECT_EQ(par.symbol, ParabolicSymbol::resolvent_power(p.form(), -1));
    EXPECT_TRUE(par.defect.is_zero());
  }
}

TEST(Parametrix, PotentialPieces) {
  const auto p = operator_symbol(cos_op());
  const auto par = parametrix(p, 4);
  const auto f = p.form();
  EXPECT_EQ(par.symbol.graded_piece(-2), ParabolicSymbol::resolvent_power(f, -1));
  EXPECT_TRUE(par.symbol.graded_piece(-3).is_zero());
  const auto q4 = ParabolicSymbol::from_term(f, {TrigPolynomial::cosine(1, 0, 1, -1.0), {}, -2});
  EXPECT_TRUE(approx_equal(par.symbol.graded_piece(-4), q4, 1e-15));
}

TEST(Parametrix, DefectDegreeBound) {
  for (const auto& op : {cos_op(), perturbed_op()}) {
    const auto p = operator_symbol(op);
    for (int N = 1; N <= 5; ++N) {
      const auto par = parametrix(p, N);
      EXPECT_EQ(par.symbol.degrees().front(), -2);
      EXPECT_GE(par.symbol.degrees().back(), -2 - N);
      if (auto lead = par.defect.leading_degree()) EXPECT_LE(*lead, -N - 1) << op.name << " N=" << N;
      EXPECT_LE(par.cancellation_residue, 1e-12);
    }
  }
}

TEST(Parametrix, DefectMatchesOperatorAppliedToPlaneWave) {
  for (const auto& op : {cos_op(), perturbed_op()}) {
    const auto p = operator_symbol(op);
    const auto par = parametrix(p, 3);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 5; ++i) {
      const auto s = random_sample(rng, 1);
      const complex lhs = apply_heat_operator(op, par.symbol, s.x[0], s.xi[0], s.tau) - 1.0;
      EXPECT_NEAR(std::abs(lhs - eval(par.defect, s.x, s.xi, s.tau)), 0.0, 1e-8);
    }
  }
}

TEST(Parametrix, RaySweepIsBounded) {
  const auto p = operator_symbol(perturbed_op());
  const auto par = parametrix(p, 3);
  double sup = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double lambda = std::pow(10.0, i / 50.0);
    const double v = std::pow(lambda, 3) * std::abs(eval(par.defect, {0.5, 0.0}, {lambda, 0.0}, -lambda * lambda));
    sup = std::max(sup, v);
  }
  EXPECT_TRUE(std::isfinite(sup));
  const double tail = 1000.0 * std::abs(eval(par.defect, {0.5, 0.0}, {10.0, 0.0}, -100.0));
  EXPECT_LE(tail, sup);
}

TEST(Parametrix, RejectsNonHeatPrincipalPart) {
  const auto f = flat(1);
  EXPECT_THROW(parametrix(ParabolicSymbol::resolvent_power(f, 1) * complex(2.0), 2), ShapeError);
  EXPECT_THROW(parametrix(ParabolicSymbol::resolvent_power(f, -1), 2), ShapeError);
  EXPECT_TRUE(has_heat_principal_part(operator_symbol(perturbed_op())));
}

TEST(VolterraClosure, ProductsOfParametricesStayCausal) {
  const auto p = operator_symbol(perturbed_op());
  const auto q = parametrix(p, 2).symbol;
  const auto prod = sharp_product(q, q, 3);
  EXPECT_TRUE(prod.all_negative_powers());
  const auto grid = CausalityGrid::defaults(1);
  for (int s : prod.degrees()) EXPECT_LE(causality_check(prod.graded_piece(s), grid), 1e-5) << "degree " << s;
}
