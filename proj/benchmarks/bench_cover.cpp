#include "arrcov/arrangement.hpp"
#include "arrcov/cover_homology.hpp"
#include "arrcov/schreier.hpp"
#include "arrcov/smith.hpp"

#include <benchmark/benchmark.h>

namespace {

const arrcov::MarkedArrangement kArrangement{9, {3, 3, 4, 2}};

arrcov::ArrangementCharacter character() {
  return arrcov::character_from_weights(kArrangement, 1, {{1, -1}, {2, 0}, {-1, 1, 1}, {-4}});
}

void BM_SnfSubstituted(benchmark::State& state) {
  const auto m = arrcov::direct_alexander(kArrangement, character());
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sub = arrcov::substitute(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(arrcov::snf_int(sub));
}
BENCHMARK(BM_SnfSubstituted)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_H1Cover(benchmark::State& state) {
  const auto p = arrcov::boundary_presentation(kArrangement);
  const auto w = arrcov::boundary_character(kArrangement, character());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrcov::h1_cover(p, w, n));
}
BENCHMARK(BM_H1Cover)->Arg(2)->Arg(4)->Arg(8);

void BM_OracleH1(benchmark::State& state) {
  const auto p = arrcov::boundary_presentation(kArrangement);
  const auto w = arrcov::boundary_character(kArrangement, character());
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arrcov::oracle_h1(p, w, n));
}
BENCHMARK(BM_OracleH1)->Arg(2)->Arg(4)->Arg(8);

void BM_LemmaRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const arrcov::FieldSelector q;
  for (auto _ : state)
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(2 * n); ++k) benchmark::DoNotOptimize(arrcov::lemma_rank(n, k, q));
}
BENCHMARK(BM_LemmaRank)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
