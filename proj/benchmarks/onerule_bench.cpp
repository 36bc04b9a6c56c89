#include <benchmark/benchmark.h>

#include "onerule/adyan.hpp"
#include "onerule/classify.hpp"
#include "onerule/oracle.hpp"
#include "onerule/witness.hpp"

namespace {

using namespace onerule;

void BM_Classify(benchmark::State& state) {
  const auto srs = OneRuleSrs::from_chars("abc", "abab", "ababcabab");
  for (auto _ : state) benchmark::DoNotOptimize(classify(srs));
}
BENCHMARK(BM_Classify);

void BM_AdyanChain(benchmark::State& state) {
  // u = (ab)^n a has a chain of n + 1 stages.
  Word u = Word::from_chars("ab").power(state.range(0)) + Word::from_chars("a");
  const Rule rule{u, u + Word::from_chars("b") + u};
  for (auto _ : state) benchmark::DoNotOptimize(adyan_chain(rule));
}
BENCHMARK(BM_AdyanChain)->Arg(1)->Arg(4)->Arg(16);

void BM_MkWitness(benchmark::State& state) {
  const auto srs = OneRuleSrs::from_chars("abc", "a", "abaca");
  for (auto _ : state) benchmark::DoNotOptimize(mk_witness(srs, state.range(0)));
}
BENCHMARK(BM_MkWitness)->Arg(3)->Arg(10)->Arg(40);

void BM_MaxDiamondWidth(benchmark::State& state) {
  const auto srs = OneRuleSrs::from_chars("ab", "ab", "bba");
  SearchBounds bounds;
  bounds.max_word_len = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(max_diamond_width(srs, bounds));
}
BENCHMARK(BM_MaxDiamondWidth)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
