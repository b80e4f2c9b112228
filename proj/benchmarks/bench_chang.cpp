#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "changcheck/chang.hpp"
#include "changcheck/cube.hpp"
#include "changcheck/info.hpp"

using namespace changcheck;

namespace {

// Random indicator with expected density 1/2; the origin is always kept so
// the set is never empty.
CubeFunction random_indicator(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> values(std::size_t{1} << n);
  for (double& v : values) v = (eng() & 1ull) ? 1.0 : 0.0;
  values[0] = 1.0;
  return CubeFunction(n, std::move(values));
}

void BM_VerifyChang(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CubeFunction f = random_indicator(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_chang(f));
  }
}

void BM_ProofTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CubeFunction f = random_indicator(n, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(proof_trace(f));
  }
}

void BM_ExhaustiveVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_verify(n));
  }
}

void BM_SampledVerify(benchmark::State& state) {
  SweepOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampled_verify(
        static_cast<int>(state.range(0)), 32, 1234, options));
  }
}

void BM_CounterexampleBreakdown(benchmark::State& state) {
  for (auto _ : state) {
    const auto [p, q] = counterexample_pair(0.01);
    benchmark::DoNotOptimize(raw_breakdown(p, q));
  }
}

}  // namespace

BENCHMARK(BM_VerifyChang)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(BM_ProofTrace)->Arg(8)->Arg(12);
BENCHMARK(BM_ExhaustiveVerify)->Arg(3)->Arg(4);
BENCHMARK(BM_SampledVerify)->Args({16, 1})->Args({16, 4});
BENCHMARK(BM_CounterexampleBreakdown);

BENCHMARK_MAIN();
