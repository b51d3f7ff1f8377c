#include <benchmark/benchmark.h>

#include <random>

#include "flagrep/characterization.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"

using namespace flagrep;

namespace {

ColoredComplex sigma() {
  return ColoredComplex::from_facets({1, 1}, {3, 4},
                                     {{{1, 1}, {1, 2}},
                                      {{2, 1}, {1, 2}},
                                      {{3, 1}, {1, 2}},
                                      {{1, 1}, {2, 2}},
                                      {{2, 1}, {2, 2}},
                                      {{3, 1}, {2, 2}},
                                      {{1, 1}, {3, 2}},
                                      {{1, 1}, {4, 2}}});
}

void BM_ClassicRep(benchmark::State& state) {
  Count N = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classic_macaulay_rep(N, static_cast<int>(state.range(0))));
    N = N % 100000 + 7919;
  }
}
BENCHMARK(BM_ClassicRep)->Arg(2)->Arg(8);

void BM_EnumerateReps(benchmark::State& state) {
  const Tuple a(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reps(a, state.range(1)));
}
BENCHMARK(BM_EnumerateReps)->Args({3, 5})->Args({3, 8})->Args({2, 12})->Unit(benchmark::kMillisecond);

void BM_SheddingTree(benchmark::State& state) {
  ColoredComplex c = sigma();
  for (auto _ : state) benchmark::DoNotOptimize(shedding_tree(c));
}
BENCHMARK(BM_SheddingTree);

void BM_RealizeLarge(benchmark::State& state) {
  MacaulayTree t = enumerate_reps({2, 2}, state.range(0)).front();
  for (auto _ : state) benchmark::DoNotOptimize(realize(t));
}
BENCHMARK(BM_RealizeLarge)->Arg(20)->Arg(35);

void BM_FlagFeasible(benchmark::State& state) {
  FineVector f({1, 1, 1});
  f.set({0, 0, 0}, 1);
  f.set({1, 1, 1}, 5);
  f.set({1, 1, 0}, 5);
  f.set({1, 0, 1}, 5);
  f.set({0, 1, 1}, 1);
  f.set({1, 0, 0}, 5);
  f.set({0, 1, 0}, 1);
  f.set({0, 0, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_flag_f_cm(3, f));
}
BENCHMARK(BM_FlagFeasible);

void BM_KruskalKatona(benchmark::State& state) {
  FineVector f({4});
  f.set({0}, 1);
  f.set({1}, 20);
  f.set({2}, 35);
  f.set({3}, 30);
  f.set({4}, 10);
  for (auto _ : state) benchmark::DoNotOptimize(check_fine_f_colored({4}, f));
}
BENCHMARK(BM_KruskalKatona);

void BM_CompressFixpoint(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<Monomial> gens;
  for (int g = 0; g < 6; ++g) {
    Monomial m(8, 0);
    for (int& x : m) x = std::uniform_int_distribution<int>(0, 1)(rng);
    gens.push_back(m);
  }
  ColoredMulticomplex mc({4, 4}, std::vector<int>(8, 1), gens);
  for (auto _ : state) benchmark::DoNotOptimize(color_compress_fixpoint(mc));
}
BENCHMARK(BM_CompressFixpoint);

void BM_CrossValidate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate({1, 1}, {3, 2}));
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
