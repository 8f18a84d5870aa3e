#include <benchmark/benchmark.h>

#include "kch/ideal.hpp"
#include "kch/ngalg.hpp"

namespace {

void eliminate_braid(benchmark::State& state, const kch::BraidWord& b) {
  kch::Presentation p = kch::relations(b);
  kch::IdealGens ideal{kch::RingSpec(p.vars), p.generators};
  for (auto _ : state) {
    kch::Elimination e = kch::eliminate(ideal, p.eliminate);
    benchmark::DoNotOptimize(e.ideal.gens.size());
    state.counters["spairs"] = static_cast<double>(e.stats.spairs);
  }
}

void BM_EliminateTrefoil(benchmark::State& state) { eliminate_braid(state, kch::BraidWord(2, {1, 1, 1})); }
void BM_EliminateFigureEight(benchmark::State& state) { eliminate_braid(state, kch::BraidWord(3, {1, -2, 1, -2})); }

void BM_Relations(benchmark::State& state) {
  kch::BraidWord b(3, {1, -2, 1, -2});
  for (auto _ : state) benchmark::DoNotOptimize(kch::relations(b).generators.size());
}

}  // namespace

BENCHMARK(BM_EliminateTrefoil)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EliminateFigureEight)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Relations)->Unit(benchmark::kMicrosecond);
