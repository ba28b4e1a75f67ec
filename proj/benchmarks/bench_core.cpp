#include <benchmark/benchmark.h>

#include <random>

#include "effspec/effspec.hpp"

namespace {

using namespace effspec;

Matrix random_nonnegative(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(0.0, 1.0);
  std::bernoulli_distribution zero(0.2);
  Matrix k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k.set(i, j, zero(rng) ? 0.0 : entry(rng));
  return k;
}

void BM_Eigenvalues(benchmark::State& state) {
  const Matrix k = random_nonnegative(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(k));
}
BENCHMARK(BM_Eigenvalues)->DenseRange(4, 16, 4);

void BM_AllPrincipalMinors(benchmark::State& state) {
  const Matrix k = random_nonnegative(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(all_principal_minors(k));
}
BENCHMARK(BM_AllPrincipalMinors)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

void BM_BooleanRadiusTable(benchmark::State& state) {
  const Matrix k = random_nonnegative(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(boolean_radius_table(k));
}
BENCHMARK(BM_BooleanRadiusTable)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_FindClans(benchmark::State& state) {
  const Matrix k = random_nonnegative(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_clans(k));
}
BENCHMARK(BM_FindClans)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_DiagonalSimilarity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix k = random_nonnegative(n, 5);
  std::vector<double> d(n);
  std::vector<double> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = 1.0 + static_cast<double>(i);
    inv[i] = 1.0 / d[i];
  }
  const Matrix k2 = scale_columns(scale_rows(k, d), inv);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_similarity_witness(k2, k));
}
BENCHMARK(BM_DiagonalSimilarity)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
