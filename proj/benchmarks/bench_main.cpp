#include <random>

#include <benchmark/benchmark.h>

#include "confalg/chevalley.hpp"
#include "confalg/conf_space.hpp"
#include "confalg/free_lie.hpp"
#include "confalg/gc_algebra.hpp"
#include "confalg/linalg.hpp"
#include "confalg/twist.hpp"

using namespace confalg;

namespace {

SparseMatrix random_sparse(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> value(-9, 9);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (coin(rng) < density) t.push_back({r, c, Rational(value(rng))});
    }
  }
  return SparseMatrix::from_triplets(n, n, std::move(t));
}

void BM_Rank(benchmark::State& state) {
  const SparseMatrix m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.05, 17);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(50)->Arg(100)->Arg(200);

void BM_FreeLie(benchmark::State& state) {
  const GradedSpace v({{"a", {0, 0, 1}}, {"b", {1, 0, 1}}, {"c", {2, 0, 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(free_lie(v, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreeLie)->DenseRange(3, 6);

void BM_ChevalleyHomology(benchmark::State& state) {
  const GLieAlgebra g = tensor_lie(builtin(BuiltinId::SmoothProperCurve, 2),
                                   free_lie(GradedSpace({{"x", {1, 0, 1}}}), static_cast<int>(state.range(0))).algebra);
  for (auto _ : state) benchmark::DoNotOptimize(ce_homology(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ChevalleyHomology)->DenseRange(2, 8, 2);

void BM_ConfCohomologyCurve(benchmark::State& state) {
  const GCAlgebra a = builtin(BuiltinId::SmoothProperCurve, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conf_cohomology(a, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ConfCohomologyCurve)->Args({2, 6})->Args({3, 6})->Args({2, 10})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
