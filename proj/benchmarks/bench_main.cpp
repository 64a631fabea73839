#include <benchmark/benchmark.h>

#include "orbq/algebra/group.hpp"
#include "orbq/quantization/quantization.hpp"
#include "orbq/random.hpp"
#include "orbq/verify/generators.hpp"

using namespace orbq;

namespace {

OrbifoldPtr d4() {
  std::vector<OrthMatrix> gens{OrthMatrix(Matrix(2, 2, {Scalar(0), Scalar(-1), Scalar(1), Scalar(0)})),
                               OrthMatrix(Matrix(2, 2, {Scalar(1), Scalar(0), Scalar(0), Scalar(-1)}))};
  return make_orbifold(2, gens);
}

void BM_PolyMultiply(benchmark::State& state) {
  const Variables vars = Variables::numbered("x", 3);
  const std::vector<std::size_t> dirs{0, 1, 2};
  Rng rng(1);
  const auto deg = static_cast<unsigned>(state.range(0));
  const Poly a = rng.poly(vars, dirs, deg, 5, 1, 1), b = rng.poly(vars, dirs, deg, 5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_Reynolds(benchmark::State& state) {
  const auto orb = d4();
  Rng rng(2);
  const std::vector<std::size_t> dirs{0, 1};
  const Poly f = rng.poly(orb->vars(), dirs, 6, 5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reynolds(f, orb->group()));
}
BENCHMARK(BM_Reynolds);

void BM_SolveCoefficients(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_coefficients(k, 2));
}
BENCHMARK(BM_SolveCoefficients)->DenseRange(0, static_cast<int>(kMaxQuantizationDegree))->Unit(benchmark::kMillisecond);

void BM_SingularQuantize(benchmark::State& state) {
  const auto orb = d4();
  const Resolution res = resolve(orb);
  const auto k = static_cast<unsigned>(state.range(0));
  const QuantizationTable table = QuantizationTable::solve(2, k);
  Rng rng(3);
  const SingularConnection nabla = random_connection(rng, orb);
  const SingularSymbol s = random_symbol(rng, orb, k);
  for (auto _ : state) benchmark::DoNotOptimize(singular_quantize(res, table, nabla, s));
}
BENCHMARK(BM_SingularQuantize)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
