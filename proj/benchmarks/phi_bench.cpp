#include <benchmark/benchmark.h>

#include "asymk/asymk.hpp"

namespace {

using asymk::Exponent;
using asymk::LaurentPoly;

const asymk::MatrixConfig& config() {
  static const auto c = asymk::buildConfig(std::vector<Exponent>{{2, 1, 2, 0, 1, 2}, {0, 1, 1, 2, 2, 2}});
  return c;
}

void phiWith(benchmark::State& state, asymk::PhiMethod method) {
  const LaurentPoly f = LaurentPoly::constant(2, 1) - LaurentPoly::monomial({1, 1}, 1);
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(asymk::phi(f, config(), r, method));
}

void BM_PhiCount(benchmark::State& state) { phiWith(state, asymk::PhiMethod::Count); }
BENCHMARK(BM_PhiCount)->RangeMultiplier(2)->Range(2, 32);

void BM_PhiGeometric(benchmark::State& state) { phiWith(state, asymk::PhiMethod::Geometric); }
BENCHMARK(BM_PhiGeometric)->RangeMultiplier(2)->Range(2, 16);

void BM_CarriesMatrix(benchmark::State& state) {
  const auto c = asymk::buildConfig(std::vector<Exponent>{{1, 1, 0, 0, -1}, {0, 0, 1, 1, 1}});
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(asymk::buildCarries(c, r));
}
BENCHMARK(BM_CarriesMatrix)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
