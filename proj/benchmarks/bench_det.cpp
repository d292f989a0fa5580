#include <benchmark/benchmark.h>

#include "supertrop/determinant.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/rank.hpp"

using namespace supertrop;

namespace {

Matrix input(std::size_t n) {
  TrialRng rng(1, n);
  return oracle::draw_matrix(rng, n, n, oracle::SamplerConfig{});
}

void BM_DetExpand(benchmark::State& state) {
  const Matrix a = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det(a, DetEngine::Expand));
}

void BM_DetAssign(benchmark::State& state) {
  const Matrix a = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det(a, DetEngine::Assign));
}

void BM_DetBruteForce(benchmark::State& state) {
  const Matrix a = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_force_det(a));
}

void BM_Rank(benchmark::State& state) {
  const Matrix a = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}

}  // namespace

BENCHMARK(BM_DetExpand)->DenseRange(2, 8);
BENCHMARK(BM_DetAssign)->DenseRange(2, 8)->Arg(16)->Arg(32);
BENCHMARK(BM_DetBruteForce)->DenseRange(2, 7);
BENCHMARK(BM_Rank)->DenseRange(2, 6);

BENCHMARK_MAIN();
