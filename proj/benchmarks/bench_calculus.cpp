#include <benchmark/benchmark.h>

#include <volterra/volterra.hpp>

using namespace volterra;

namespace {

OperatorSpec perturbed() {
  QuadraticForm g(1);
  g.set_entry(0, 0, TrigPolynomial::constant(1, 1.0) + TrigPolynomial::cosine(1, 0, 1, 0.5));
  return OperatorSpec::divergence_form(1, g, TrigPolynomial::cosine(1, 0, 1, 1.0));
}

void BM_SharpProduct(benchmark::State& state) {
  const auto p = operator_symbol(perturbed());
  const auto q = parametrix(p, 2).symbol;
  const int N = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sharp_product(p, q, N));
}
BENCHMARK(BM_SharpProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_Parametrix(benchmark::State& state) {
  const auto p = operator_symbol(perturbed());
  for (auto _ : state) benchmark::DoNotOptimize(parametrix(p, int(state.range(0))));
}
BENCHMARK(BM_Parametrix)->DenseRange(1, 4);

void BM_HeatCoefficients(benchmark::State& state) {
  const auto op = perturbed();
  for (auto _ : state) benchmark::DoNotOptimize(heat_coefficients(op, int(state.range(0))));
}
BENCHMARK(BM_HeatCoefficients)->Arg(2)->Arg(4);

void BM_CausalityCheck(benchmark::State& state) {
  const auto q = parametrix(operator_symbol(perturbed()), 2).symbol;
  const auto grid = CausalityGrid::defaults(1);
  for (auto _ : state) benchmark::DoNotOptimize(causality_check(q, grid));
}
BENCHMARK(BM_CausalityCheck)->Unit(benchmark::kMillisecond);

}  // namespace
