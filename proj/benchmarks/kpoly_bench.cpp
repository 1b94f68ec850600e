#include <benchmark/benchmark.h>

#include "asymk/asymk.hpp"

namespace {

using asymk::Exponent;

void BM_KPolyEulerian(benchmark::State& state) {
  const auto config = asymk::buildConfig(std::vector<Exponent>{Exponent(static_cast<std::size_t>(state.range(0)), 1)});
  for (auto _ : state) benchmark::DoNotOptimize(asymk::kPolynomial(config));
}
BENCHMARK(BM_KPolyEulerian)->DenseRange(3, 7);

void BM_KPolyTwoRows(benchmark::State& state) {
  const auto config = asymk::buildConfig(std::vector<Exponent>{{2, 1, 2, 0, 1, 2}, {0, 1, 1, 2, 2, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(asymk::kPolynomial(config));
}
BENCHMARK(BM_KPolyTwoRows);

void BM_KPolyThreeRows(benchmark::State& state) {
  const auto config =
      asymk::buildConfig(std::vector<Exponent>{{1, -1, 1, 0, 0}, {0, 1, -1, 1, 0}, {0, 0, 1, -1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(asymk::kPolynomial(config));
}
BENCHMARK(BM_KPolyThreeRows);

}  // namespace
