#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "tsj/analysis.hpp"
#include "tsj/classification.hpp"
#include "tsj/matroid.hpp"
#include "tsj/reconstruction.hpp"

namespace {

// n/2 blocks x_{2k}^{a} * x_{2k+1}^{b} plus the Brieskorn-Pham tail if n is odd.
tsj::SupportSet block_support(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(1, 5);
  tsj::ExponentSet f;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    std::vector<tsj::Natural> e(n, tsj::Natural(0));
    e[i] = entry(rng);
    e[i + 1] = entry(rng);
    f.insert(tsj::Exponent(std::move(e)));
  }
  if (n % 2 == 1) {
    std::vector<tsj::Natural> e(n, tsj::Natural(0));
    e[n - 1] = entry(rng) + 1;
    f.insert(tsj::Exponent(std::move(e)));
  }
  return tsj::SupportSet(n, std::move(f));
}

void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto support = block_support(static_cast<std::size_t>(state.range(0)), rng);
  const auto cover = tsj::build_cover(support);
  for (auto _ : state) benchmark::DoNotOptimize(tsj::rank(cover));
  state.counters["mu"] = static_cast<double>(cover.mu());
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 64);

void BM_Reconstruct(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto support = block_support(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(tsj::reconstruct(support));
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(2)->Range(4, 64);

void BM_Height(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto ideal = tsj::jacobian_ideal(block_support(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(tsj::height(ideal));
}
BENCHMARK(BM_Height)->RangeMultiplier(2)->Range(4, 32);

void BM_AnalyzeWhitney(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsj::analyze(tsj::input_from_polynomial("x^2 + y^2*z")));
  }
}
BENCHMARK(BM_AnalyzeWhitney);

void BM_Analyze(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto support = block_support(static_cast<std::size_t>(state.range(0)), rng);
  const tsj::AnalysisInput input{"bench", tsj::default_variable_names(support.dimension()), std::nullopt, support};
  for (auto _ : state) benchmark::DoNotOptimize(tsj::analyze(input));
}
BENCHMARK(BM_Analyze)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
