#include "wexc/circulant.hpp"
#include "wexc/classify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

std::vector<wexc::BigInt> random_row(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<wexc::BigInt> row(n);
  for (auto& x : row) x = static_cast<long>(rng() % 10);
  return row;
}

void BM_Resultant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const wexc::IntPoly phi = wexc::cyclotomic_poly(n);
  const wexc::IntPoly f(random_row(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(wexc::resultant(phi, f));
}
BENCHMARK(BM_Resultant)->Arg(7)->Arg(13)->Arg(31)->Arg(61);

void BM_CircDet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto method = static_cast<wexc::DetMethod>(state.range(1));
  const wexc::Circulant c(random_row(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(wexc::circ_det(c, method));
}
BENCHMARK(BM_CircDet)->ArgsProduct({{7, 13, 31}, {0, 1, 2}});

void BM_NormOfComposition(benchmark::State& state) {
  const wexc::Composition a({3, 0, 2, 1, 0, 0, 1, 0, 2, 0, 0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(wexc::norm_of_composition(13, a));
}
BENCHMARK(BM_NormOfComposition);

void BM_Factorize(benchmark::State& state) {
  const wexc::BigInt n = wexc::BigInt("1000000007") * wexc::BigInt("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(wexc::factorize(n));
}
BENCHMARK(BM_Factorize);

void BM_ClassificationTable(benchmark::State& state) {
  wexc::TableOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wexc::classification_table(static_cast<std::uint32_t>(state.range(0)), opts));
}
BENCHMARK(BM_ClassificationTable)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
