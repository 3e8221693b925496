#include <benchmark/benchmark.h>

#include <volterra/volterra.hpp>

using namespace volterra;

namespace {

DiscretizedOperator cos_matrix(int n) {
  OperatorSpec op = OperatorSpec::laplacian(1);
  op.potential = TrigPolynomial::cosine(1, 0, 1, 1.0);
  return discretize(op, n);
}

void BM_DunfordHeat(benchmark::State& state) {
  const auto D = cos_matrix(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dunford_heat(D, 0.1));
}
BENCHMARK(BM_DunfordHeat)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EigHeat(benchmark::State& state) {
  const auto D = cos_matrix(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_heat(D.hermitian_part, 0.1));
}
BENCHMARK(BM_EigHeat)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_HilleYosida(benchmark::State& state) {
  const auto D = cos_matrix(16);
  for (auto _ : state) benchmark::DoNotOptimize(hy_heat(D.matrix, double(state.range(0)), 1.0));
}
BENCHMARK(BM_HilleYosida)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
