#include <benchmark/benchmark.h>

#include "qaw/hall.hpp"
#include "qaw/linalg.hpp"
#include "qaw/uaw.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

static void BM_ReduceWord(benchmark::State& state) {
  const auto len = static_cast<size_t>(state.range(0));
  std::vector<Word> words;
  for (uint64_t i = 0; i < 64; ++i) words.push_back(sampling::random_word(i, len));
  for (auto _ : state) {
    Uaw u;  // fresh memo each round, so the work is real
    for (const auto& w : words) benchmark::DoNotOptimize(u.reduce_word(w.letters()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(words.size()));
}
BENCHMARK(BM_ReduceWord)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HallRewrite(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::vector<LieTreePtr> trees;
  for (uint64_t i = 0; i < 32; ++i) trees.push_back(sampling::random_tree(i, deg));
  for (auto _ : state) {
    HallBasis hb(deg);
    for (const auto& t : trees) benchmark::DoNotOptimize(hb.rewrite(*t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(trees.size()));
}
BENCHMARK(BM_HallRewrite)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_StandardMonomialRank(benchmark::State& state) {
  const int max_index = static_cast<int>(state.range(0));
  Uaw u;
  HallBasis hb(5);
  std::vector<UawElement> vecs;
  for (int n = 1; n <= max_index; ++n) vecs.push_back(u.reduce(hb.expansion(n)));
  auto basis = basis_from_support(vecs, [](const NormalWord& a, const NormalWord& b) { return b < a; },
                                  NormalWord{});
  ExactMatrix m = expansion_matrix(vecs, basis);
  for (auto _ : state) benchmark::DoNotOptimize(bareiss(m).rank);
}
BENCHMARK(BM_StandardMonomialRank)->Arg(32)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_OmegaBasisRoundTrip(benchmark::State& state) {
  Uaw u;
  std::vector<UawElement> xs;
  for (uint64_t i = 0; i < 16; ++i) xs.push_back(sampling::random_uaw(i, 5, 4));
  for (auto _ : state)
    for (const auto& x : xs) benchmark::DoNotOptimize(u.from_omega_basis(u.to_omega_basis(x)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}
BENCHMARK(BM_OmegaBasisRoundTrip)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
