#include <benchmark/benchmark.h>

#include "roelcke/gaps.hpp"
#include "roelcke/quotdist.hpp"
#include "roelcke/sampling.hpp"

using namespace roelcke;

namespace {

void BM_Compose(benchmark::State& state) {
  Sampler rng(1);
  std::vector<PLMono> fs;
  for (int k = 0; k < 64; ++k) fs.push_back(rng.mono(3));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(fs[k % 64], fs[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(BM_Compose);

void BM_Canonicalize(benchmark::State& state) {
  Sampler rng(2);
  std::vector<MonoTuple> ts;
  for (int k = 0; k < 32; ++k) ts.push_back(rng.tuple(static_cast<std::size_t>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(ts[k++ % 32]));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(3)->Arg(5);

void BM_QuotDecision(benchmark::State& state) {
  Sampler rng(3);
  const auto a = rng.tuple(2), b = rng.tuple(2);
  const Rational eps = quot_dist(a, b, Rational(1, 1024)).hi;
  for (auto _ : state) benchmark::DoNotOptimize(quot_decision(a, b, eps));
}
BENCHMARK(BM_QuotDecision);

void BM_QuotDist(benchmark::State& state) {
  Sampler rng(4);
  const auto a = rng.canonical(3), b = rng.canonical(3);
  for (auto _ : state) benchmark::DoNotOptimize(quot_dist(a.tuple(), b.tuple(), Rational(1, 256)));
}
BENCHMARK(BM_QuotDist);

void BM_BruteOracle(benchmark::State& state) {
  Sampler rng(5);
  const auto a = rng.canonical(2), b = rng.canonical(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_oracle(a.tuple(), b.tuple(), static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BruteOracle)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EquivTest(benchmark::State& state) {
  Sampler rng(6);
  const auto g = rng.clean_gapset(3);
  const auto p = rng.canonical(2);
  for (auto _ : state) benchmark::DoNotOptimize(equiv_test(p[0], p[1], g));
}
BENCHMARK(BM_EquivTest);

}  // namespace

BENCHMARK_MAIN();
