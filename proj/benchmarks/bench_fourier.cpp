#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "changcheck/cube.hpp"
#include "changcheck/fourier.hpp"

using namespace changcheck;

namespace {

CubeFunction random_function(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> values(std::size_t{1} << n);
  for (double& v : values) {
    v = 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
  }
  return CubeFunction(n, std::move(values));
}

void BM_WalshHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CubeFunction f = random_function(n, 1);
  for (auto _ : state) {
    FourierSpectrum spectrum = walsh_hadamard_transform(f);
    benchmark::DoNotOptimize(spectrum);
  }
  state.SetComplexityN(std::int64_t{1} << n);
}

void BM_NaiveCoefficient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CubeFunction f = random_function(n, 2);
  std::uint32_t mask = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_fourier_coefficient(f, mask));
    mask = (mask + 1) & ((std::uint32_t{1} << n) - 1);
  }
}

void BM_CumulativeLevelWeight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FourierSpectrum spectrum =
      walsh_hadamard_transform(random_function(n, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cumulative_level_weight(spectrum, 2));
  }
}

}  // namespace

BENCHMARK(BM_WalshHadamard)->Arg(10)->Arg(14)->Arg(18)->Arg(20)
    ->Complexity(benchmark::oNLogN);
BENCHMARK(BM_NaiveCoefficient)->Arg(10)->Arg(14);
BENCHMARK(BM_CumulativeLevelWeight)->Arg(12)->Arg(16);
